#include "tpzeros/polynomials.hpp"

#include "tpzeros/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tpz {

namespace {

constexpr double kPoleTol = 1e-14;

cplx ipow(cplx base, std::size_t e) {
    cplx result(1.0, 0.0);
    while (e > 0) {
        if (e & 1U)
            result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

double ipow(double base, std::size_t e) {
    double result = 1.0;
    while (e > 0) {
        if (e & 1U)
            result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

void require_distinct(const CharacteristicData& ch) {
    if (ch.t1 == ch.t2 || std::abs(ch.t1 - ch.t2) <= 1e-14 * std::abs(ch.t2))
        throw Error(ErrorCode::DegenerateDiscriminant, "t1 == t2; closed form needs distinct zeros");
}

} // namespace

PolynomialCoeffs taylor_poly(const RecurrenceSpec& spec, std::size_t m) {
    return {PolyKind::P, m, generate_sequence(spec, m)};
}

PolynomialCoeffs reciprocal_poly(const PolynomialCoeffs& p) {
    if (p.kind != PolyKind::P)
        throw Error(ErrorCode::PreconditionViolated, "reciprocal_poly expects a Taylor polynomial");
    PolynomialCoeffs out{PolyKind::PStar, p.m, p.coeffs};
    std::reverse(out.coeffs.begin(), out.coeffs.end());
    return out;
}

PolynomialCoeffs normalized_H(const RecurrenceSpec& spec, std::size_t m) {
    const std::vector<double> seq = generate_sequence(spec, m);
    const double g = -sign(spec.a * spec.b) * std::sqrt(std::abs(spec.c / spec.a));
    PolynomialCoeffs out{PolyKind::H, m, std::vector<double>(m + 1)};
    for (std::size_t n = 0; n <= m; ++n) {
        const double v = seq[n] * ipow(g, n);
        if (!std::isfinite(v))
            throw Error(ErrorCode::Overflow, "H_m coefficient is not finite");
        out.coeffs[m - n] = v;
    }
    return out;
}

cplx h_closed_form_numerator(const CharacteristicData& ch, std::size_t m, cplx z) {
    const cplx t1 = ch.t1;
    const cplx t2 = ch.t2;
    const double C = ch.C;
    const double D = ch.D;
    const double s_m1 = (ch.sign_ac < 0 && (m + 1) % 2 == 1) ? -1.0 : 1.0;
    const cplx value = -ipow(t2, m + 1) * (1.0 - z * t2) * (C * t1 + D)
                       - ipow(t1, m + 1) * (z * t1 - 1.0) * (C * t2 + D)
                       + s_m1 * ipow(z, m + 1) * (t1 - t2) * (C + D * z);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw Error(ErrorCode::Overflow, "closed-form numerator is not finite");
    return value;
}

cplx h_closed_form(const CharacteristicData& ch, std::size_t m, cplx z) {
    require_distinct(ch);
    const cplx t1 = ch.t1;
    const cplx t2 = ch.t2;
    const cplx pole1 = 1.0 - z * t1;
    const cplx pole2 = 1.0 - z * t2;
    if (std::abs(pole1) < kPoleTol || std::abs(pole2) < kPoleTol)
        throw Error(ErrorCode::PoleEvaluation, "z is at a zero of the closed-form denominator");

    const double C = ch.C;
    const double D = ch.D;
    const double s_m = (ch.sign_ac < 0 && m % 2 == 1) ? -1.0 : 1.0;
    const double s_m1 = ch.sign_ac * s_m;

    // Factor rho^{m+1} out of every power so the bracket stays O(1).
    const double rho = std::max({std::abs(t1), std::abs(t2), std::abs(z), 1.0});
    const cplx scaled = -ipow(t2 / rho, m + 1) * pole2 * (C * t1 + D)
                        - ipow(t1 / rho, m + 1) * (z * t1 - 1.0) * (C * t2 + D)
                        + s_m1 * ipow(z / rho, m + 1) * (t1 - t2) * (C + D * z);
    const cplx ratio = scaled / (s_m * (t1 - t2) * pole1 * pole2);
    if (ratio == 0.0)
        return ratio;

    const double log_mag = std::log(std::abs(ratio)) + static_cast<double>(m + 1) * std::log(rho);
    if (log_mag > std::log(std::numeric_limits<double>::max()))
        throw Error(ErrorCode::Overflow, "H_m(z) exceeds the double range");
    const std::size_t half = (m + 1) / 2;
    const cplx value = ratio * ipow(rho, half) * ipow(rho, m + 1 - half);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw Error(ErrorCode::Overflow, "H_m(z) exceeds the double range");
    return value;
}

cplx eval_poly(std::span<const double> coeffs, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

} // namespace tpz
