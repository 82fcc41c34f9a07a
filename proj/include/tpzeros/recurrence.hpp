#pragma once

/**
 * Three-term recurrences c*a(n+2) + b*a(n+1) + a*a(n) = 0 with real
 * coefficients, their sequences, and the characteristic quantities that
 * govern where the zeros of the associated Taylor polynomials lie.
 *
 * The characteristic polynomial is written c + b*t + a*t^2. Its zeros are
 * alpha (largest modulus) and beta. The normalized polynomial
 * 1 + B*t + sign(ac)*t^2 has zeros t1, t2 with |t2| >= |t1|, related by
 * alpha = -sign(ab) * sqrt|c/a| * t2.
 */

#include <complex>
#include <cstddef>
#include <vector>

namespace tpz {

using cplx = std::complex<double>;

struct RecurrenceSpec {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;

    bool operator==(const RecurrenceSpec&) const = default;
};

struct CharacteristicData {
    cplx alpha;
    cplx beta;
    cplx t1;
    cplx t2;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
    double discriminant = 0.0;
    int sign_ac = 1;
    /// |c| / |a*alpha|, which equals |beta|.
    double critical_radius = 0.0;
};

/// +1 for positive, -1 for negative. Zero maps to +1 but never occurs on
/// validated specs.
constexpr int sign(double x) { return x < 0.0 ? -1 : 1; }

/// Throws Error{ZeroCoefficient | ZeroInitialValues | NonFinite}.
RecurrenceSpec validate(double a, double b, double c, double a0, double a1);

/// a_0 .. a_m. Throws Error{Overflow} on any non-finite term.
std::vector<double> generate_sequence(const RecurrenceSpec& spec, std::size_t m);

CharacteristicData characteristic(const RecurrenceSpec& spec);

/// Binet-type evaluation a_n = A/alpha^n + A'/beta^n.
/// Throws Error{DegenerateDiscriminant} when alpha == beta.
double closed_form_term(const CharacteristicData& ch, const RecurrenceSpec& spec, std::size_t n);

/// True when b^2 - 4ac is zero to within rounding of its two terms.
bool is_degenerate_discriminant(const RecurrenceSpec& spec);

} // namespace tpz
