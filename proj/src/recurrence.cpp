#include "tpzeros/recurrence.hpp"

#include "tpzeros/error.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace tpz {

namespace {

constexpr double kDegenerateRelTol = 1e-14;

struct RootPair {
    cplx big;
    cplx small;
};

// Zeros of lead*t^2 + mid*t + constant ordered by modulus. For real zeros the
// larger one is taken first and the other recovered from the product, which
// avoids cancellation when mid^2 >> 4*lead*constant.
RootPair solve_quadratic(double lead, double mid, double constant, double disc) {
    if (disc >= 0.0) {
        const double q = -0.5 * (mid + (mid < 0.0 ? -1.0 : 1.0) * std::sqrt(disc));
        double r1 = q / lead;
        double r2 = constant / q;
        if (std::abs(r2) > std::abs(r1) || (std::abs(r2) == std::abs(r1) && r2 > r1))
            std::swap(r1, r2);
        return {cplx(r1, 0.0), cplx(r2, 0.0)};
    }
    const double re = -mid / (2.0 * lead);
    const double im = std::abs(std::sqrt(-disc) / (2.0 * lead));
    return {cplx(re, im), cplx(re, -im)};
}

} // namespace

RecurrenceSpec validate(double a, double b, double c, double a0, double a1) {
    for (double v : {a, b, c, a0, a1}) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFinite, "recurrence parameters must be finite reals");
    }
    if (a == 0.0 || b == 0.0 || c == 0.0)
        throw Error(ErrorCode::ZeroCoefficient, "a*b*c must be nonzero");
    if (a0 == 0.0 && a1 == 0.0)
        throw Error(ErrorCode::ZeroInitialValues, "(a0, a1) must not be (0, 0)");
    return RecurrenceSpec{a, b, c, a0, a1};
}

std::vector<double> generate_sequence(const RecurrenceSpec& spec, std::size_t m) {
    std::vector<double> seq;
    seq.reserve(m + 1);
    seq.push_back(spec.a0);
    if (m >= 1)
        seq.push_back(spec.a1);
    for (std::size_t n = 2; n <= m; ++n) {
        const double next = -(spec.b * seq[n - 1] + spec.a * seq[n - 2]) / spec.c;
        if (!std::isfinite(next))
            throw Error(ErrorCode::Overflow, "sequence term a_" + std::to_string(n) + " is not finite");
        seq.push_back(next);
    }
    return seq;
}

bool is_degenerate_discriminant(const RecurrenceSpec& spec) {
    const double bb = spec.b * spec.b;
    const double four_ac = 4.0 * spec.a * spec.c;
    return std::abs(bb - four_ac) <= kDegenerateRelTol * std::max(bb, std::abs(four_ac));
}

CharacteristicData characteristic(const RecurrenceSpec& spec) {
    const auto& [a, b, c, a0, a1] = spec;
    CharacteristicData ch;
    ch.discriminant = b * b - 4.0 * a * c;
    ch.sign_ac = sign(a * c);
    const int sign_ab = sign(a * b);
    const double abs_ac = std::abs(a * c);
    const double scale = std::sqrt(std::abs(c / a));

    ch.B = -ch.sign_ac * std::abs(b / std::sqrt(abs_ac));
    ch.C = -(a1 + b * a0 / c) * sign_ab * scale;
    ch.D = a0;

    // 1 + B t + sign(ac) t^2 has discriminant (b^2 - 4ac)/|ac|; reuse the
    // sign of the unnormalized one so both quadratics agree on real/complex.
    double disc_t = ch.B * ch.B - 4.0 * ch.sign_ac;
    if (ch.discriminant >= 0.0)
        disc_t = std::max(disc_t, 0.0);
    else
        disc_t = std::min(disc_t, -std::numeric_limits<double>::min());
    const RootPair t = solve_quadratic(ch.sign_ac, ch.B, 1.0, disc_t);
    ch.t2 = t.big;
    ch.t1 = t.small;

    const RootPair ab = solve_quadratic(a, b, c, ch.discriminant);
    ch.alpha = ab.big;
    ch.beta = ab.small;
    if (ch.discriminant < 0.0) {
        // Conjugate pair: alpha is the one matching -sign(ab)*sqrt|c/a|*t2.
        const cplx mapped = -double(sign_ab) * scale * ch.t2;
        if (std::abs(ch.beta - mapped) < std::abs(ch.alpha - mapped))
            std::swap(ch.alpha, ch.beta);
    }
    ch.critical_radius = std::abs(c) / (std::abs(a) * std::abs(ch.alpha));
    return ch;
}

double closed_form_term(const CharacteristicData& ch, const RecurrenceSpec& spec, std::size_t n) {
    if (is_degenerate_discriminant(spec))
        throw Error(ErrorCode::DegenerateDiscriminant, "repeated characteristic root (b^2 = 4ac)");
    // 1/alpha and 1/beta are the zeros of c*l^2 + b*l + a.
    const cplx l1 = 1.0 / ch.alpha;
    const cplx l2 = 1.0 / ch.beta;
    const cplx A = (spec.a1 - spec.a0 * l2) / (l1 - l2);
    const cplx A2 = spec.a0 - A;
    const double nd = static_cast<double>(n);
    const double value = (A * std::pow(l1, nd) + A2 * std::pow(l2, nd)).real();
    if (!std::isfinite(value))
        throw Error(ErrorCode::Overflow, "closed-form term is not finite");
    return value;
}

} // namespace tpz
