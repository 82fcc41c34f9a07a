#pragma once

#include "tpzeros/recurrence.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tpz {

enum class PolyKind { P, PStar, H };

/// Dense real polynomial, coeffs[k] multiplies z^k.
struct PolynomialCoeffs {
    PolyKind kind = PolyKind::P;
    std::size_t m = 0;
    std::vector<double> coeffs;
};

/// P_m(z) = sum_{n<=m} a_n z^n.
PolynomialCoeffs taylor_poly(const RecurrenceSpec& spec, std::size_t m);

/// P*_m(z) = z^m P_m(1/z), i.e. the coefficient reversal.
/// Throws Error{PreconditionViolated} unless p.kind == PolyKind::P.
PolynomialCoeffs reciprocal_poly(const PolynomialCoeffs& p);

/// H_m(z) = sign^m(-ab) |c/a|^{m/2} P*_m(-sign(ab) sqrt|a/c| z).
///
/// Coefficient k works out to a_{m-k} * g^{m-k} with g = -sign(ab) sqrt|c/a|,
/// so H_m is the reversal of the rescaled sequence whose generating function
/// is (D + C t) / (1 + B t + sign(ac) t^2).
PolynomialCoeffs normalized_H(const RecurrenceSpec& spec, std::size_t m);

/// H_m(z) from the partial-fraction closed form in t1, t2, C, D.
///
/// Evaluated as N(z) / (sign(ac)^m (t1 - t2)(1 - z t1)(1 - z t2)) where
///   N(z) = -t2^{m+1}(1 - z t2)(C t1 + D) - t1^{m+1}(z t1 - 1)(C t2 + D)
///          + sign(ac)^{m+1} z^{m+1}(t1 - t2)(C + D z).
/// Powers are factored through a common log-scale so large m does not
/// overflow prematurely.
///
/// Throws Error{DegenerateDiscriminant} if t1 == t2,
/// Error{PoleEvaluation} if |1 - z t1| or |1 - z t2| < 1e-14,
/// Error{Overflow} if the value itself is not representable.
cplx h_closed_form(const CharacteristicData& ch, std::size_t m, cplx z);

/// Numerator N(z) of the closed form above (the Rouché comparison
/// polynomial when ac < 0, up to a sign).
cplx h_closed_form_numerator(const CharacteristicData& ch, std::size_t m, cplx z);

/// Horner evaluation of sum coeffs[k] z^k.
cplx eval_poly(std::span<const double> coeffs, cplx z);
inline cplx eval_poly(const PolynomialCoeffs& p, cplx z) { return eval_poly(p.coeffs, z); }

} // namespace tpz
