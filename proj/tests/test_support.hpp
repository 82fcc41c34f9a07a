#pragma once

#include "tpzeros/recurrence.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace tpz::testing {

// Random specs in [-5, 5]^5 away from the degenerate discriminant.
class RandomSpecs {
public:
    explicit RandomSpecs(std::uint64_t seed) : rng_(seed) {}

    RecurrenceSpec next() {
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (;;) {
            RecurrenceSpec s{u(rng_), u(rng_), u(rng_), u(rng_), u(rng_)};
            if (std::abs(s.b * s.b - 4.0 * s.a * s.c) < 1e-6)
                continue;
            if (std::abs(s.a) < 1e-3 || std::abs(s.b) < 1e-3 || std::abs(s.c) < 1e-3)
                continue;
            return s;
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

inline int sgn(double x) { return x < 0 ? -1 : 1; }

} // namespace tpz::testing
