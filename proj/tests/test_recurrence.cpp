#include "tpzeros/error.hpp"
#include "tpzeros/recurrence.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace tpz;
using tpz::testing::RandomSpecs;
using tpz::testing::sgn;

namespace {

const RecurrenceSpec kFibonacci{-1, -1, 1, 0, 1};
const RecurrenceSpec kExceptional{5, 1, -1, 1, -3};

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected tpz::Error");
    return ErrorCode::PreconditionViolated;
}

} // namespace

TEST_CASE("validate accepts the figure parameters and rejects forbidden inputs") {
    CHECK(validate(5, 1, -1, 1, -3) == kExceptional);
    CHECK(code_of([] { validate(1, 1, 0, 1, 1); }) == ErrorCode::ZeroCoefficient);
    CHECK(code_of([] { validate(0, 1, 1, 1, 1); }) == ErrorCode::ZeroCoefficient);
    CHECK(code_of([] { validate(1, 1, 1, 0, 0); }) == ErrorCode::ZeroInitialValues);
    CHECK(code_of([] { validate(1, std::numeric_limits<double>::quiet_NaN(), 1, 1, 1); }) == ErrorCode::NonFinite);
    CHECK(code_of([] { validate(1, 1, 1, std::numeric_limits<double>::infinity(), 1); }) == ErrorCode::NonFinite);
}

TEST_CASE("generate_sequence") {
    CHECK(generate_sequence(kFibonacci, 6) == std::vector<double>{0, 1, 1, 2, 3, 5, 8});
    // a2 = 1*(-3) + 5*1 = 2, a3 = 1*2 + 5*(-3) = -13 (c = -1)
    CHECK(generate_sequence(kExceptional, 3) == std::vector<double>{1, -3, 2, -13});
    CHECK(generate_sequence(kExceptional, 0) == std::vector<double>{1});
    CHECK(generate_sequence(kExceptional, 1) == std::vector<double>{1, -3});

    SUBCASE("overflow is reported, not propagated") {
        const RecurrenceSpec fast{1, 1e6, -1e-6, 1, 1};
        CHECK(code_of([&] { generate_sequence(fast, 200); }) == ErrorCode::Overflow);
    }

    SUBCASE("terms satisfy the recurrence as evaluated") {
        RandomSpecs rnd(101);
        for (int i = 0; i < 50; ++i) {
            const RecurrenceSpec s = rnd.next();
            const auto seq = generate_sequence(s, 30);
            for (std::size_t n = 0; n + 2 < seq.size(); ++n)
                CHECK(seq[n + 2] == -(s.b * seq[n + 1] + s.a * seq[n]) / s.c);
        }
    }
}

TEST_CASE("characteristic zeros match hand factorizations") {
    SUBCASE("2t^2 + 5t + 3 = (2t + 3)(t + 1)") {
        const auto ch = characteristic({2, 5, 3, 1, -2});
        CHECK(ch.alpha.real() == doctest::Approx(-1.5).epsilon(1e-15));
        CHECK(ch.beta.real() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(ch.critical_radius == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("2t^2 - 3t + 1 = (2t - 1)(t - 1)") {
        const auto ch = characteristic({2, -3, 1, 2, 5});
        CHECK(ch.alpha.real() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(ch.beta.real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(ch.critical_radius == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("2t^2 + t - 1 = (2t - 1)(t + 1)") {
        const auto ch = characteristic({2, 1, -1, 2, 1});
        CHECK(ch.alpha.real() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(ch.beta.real() == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(ch.critical_radius == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("5t^2 + t - 1: alpha = -(1 + sqrt 21)/10") {
        const auto ch = characteristic(kExceptional);
        CHECK(ch.alpha.real() == doctest::Approx(-(1.0 + std::sqrt(21.0)) / 10.0).epsilon(1e-14));
        CHECK(ch.critical_radius == doctest::Approx(1.0 / (5.0 * (1.0 + std::sqrt(21.0)) / 10.0)).epsilon(1e-14));
    }
}

TEST_CASE("characteristic invariants on random specs") {
    RandomSpecs rnd(202);
    for (int i = 0; i < 500; ++i) {
        const RecurrenceSpec s = rnd.next();
        const auto ch = characteristic(s);
        CAPTURE(s.a);
        CAPTURE(s.b);
        CAPTURE(s.c);

        for (cplx t : {ch.alpha, ch.beta}) {
            const double scale = std::abs(s.c) + std::abs(s.b * t) + std::abs(s.a * t * t);
            CHECK(std::abs(s.c + s.b * t + s.a * t * t) <= 1e-12 * scale);
        }
        CHECK(std::abs(ch.alpha) >= std::abs(ch.beta));
        CHECK(std::abs(ch.t2) >= std::abs(ch.t1));
        CHECK(std::abs(ch.t1 * ch.t2 - double(sgn(s.a * s.c))) <= 1e-12);

        const cplx mapped = -double(sgn(s.a * s.b)) * std::sqrt(std::abs(s.c / s.a)) * ch.t2;
        CHECK(std::abs(ch.alpha - mapped) <= 1e-12 * std::abs(ch.alpha));
        CHECK(ch.critical_radius == doctest::Approx(std::abs(ch.beta)).epsilon(1e-12));

        if (s.a * s.c < 0) {
            CHECK(ch.t1.real() > -1.0);
            CHECK(ch.t1.real() < 0.0);
            CHECK(ch.t2.real() > 1.0);
        } else if (ch.discriminant > 0) {
            CHECK(ch.t1.real() > 0.0);
            CHECK(ch.t1.real() < 1.0);
            CHECK(ch.t2.real() > 1.0);
        } else {
            CHECK(ch.alpha == std::conj(ch.beta));
            CHECK(std::abs(std::abs(ch.t1) - std::abs(ch.t2)) <= 1e-14);
            CHECK(ch.t2.imag() >= 0.0);
        }

        // B, C, D from (alpha, beta) alone: b/a = -(alpha + beta), c/a = alpha*beta.
        const double b_over_a = -(ch.alpha + ch.beta).real();
        const double c_over_a = (ch.alpha * ch.beta).real();
        const double B = -sgn(c_over_a) * std::abs(b_over_a) / std::sqrt(std::abs(c_over_a));
        const double C = -(s.a1 + b_over_a * s.a0 / c_over_a) * sgn(b_over_a) * std::sqrt(std::abs(c_over_a));
        CHECK(B == doctest::Approx(ch.B).epsilon(1e-12));
        const double c_terms = (std::abs(s.a1) + std::abs(s.b * s.a0 / s.c)) * std::sqrt(std::abs(s.c / s.a));
        CHECK(std::abs(C - ch.C) <= 1e-12 * c_terms);
        CHECK(ch.D == s.a0);
    }
}

TEST_CASE("closed_form_term") {
    CHECK(closed_form_term(characteristic(kFibonacci), kFibonacci, 10) == doctest::Approx(55.0).epsilon(1e-9));
    CHECK(closed_form_term(characteristic(kExceptional), kExceptional, 3) == doctest::Approx(-13.0).epsilon(1e-9));
    const RecurrenceSpec repeated{1, 2, 1, 1, 1};
    CHECK(code_of([&] { closed_form_term(characteristic(repeated), repeated, 3); })
          == ErrorCode::DegenerateDiscriminant);

    SUBCASE("agrees with the recurrence for n <= 60") {
        RandomSpecs rnd(303);
        int checked = 0;
        for (int i = 0; i < 300; ++i) {
            const RecurrenceSpec s = rnd.next();
            if (std::abs(s.b * s.b - 4 * s.a * s.c) < 1e-2)
                continue;
            std::vector<double> seq;
            try {
                seq = generate_sequence(s, 60);
            } catch (const Error&) {
                continue;
            }
            const auto ch = characteristic(s);
            const cplx l1 = 1.0 / ch.alpha;
            const cplx l2 = 1.0 / ch.beta;
            const cplx A = (s.a1 - s.a0 * l2) / (l1 - l2);
            for (std::size_t n = 0; n <= 60; ++n) {
                const double term_scale = std::abs(A * std::pow(l1, double(n))) +
                                          std::abs((s.a0 - A) * std::pow(l2, double(n)));
                const double scale = std::max(std::abs(seq[n]), term_scale);
                CHECK(std::abs(closed_form_term(ch, s, n) - seq[n]) <= 1e-9 * scale + 1e-12);
            }
            ++checked;
        }
        CHECK(checked > 200);
    }
}
