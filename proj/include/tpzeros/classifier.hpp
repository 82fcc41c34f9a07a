#pragma once

/**
 * Decides which zero-location result applies to a recurrence and checks the
 * Rouché comparison inequalities behind it numerically.
 *
 *   T1: ac < 0 and a0 b (a1 c + b a0) >= 0. For large m all zeros of P_m lie
 *       outside the open ball of radius r* = |c|/|a alpha|, except one zero
 *       inside exactly when |a1 c + b a0| > |a alpha a0|.
 *   T2: ac > 0, b^2 - 4ac > 0, a0 b (a1 c + b a0) <= 0. For large m all zeros
 *       lie in the closed ball of radius r*.
 *   T3: ac > 0, b^2 - 4ac > 0, a0 b (a1 c + b a0) > 0 and
 *       |a0 c| > |(a1 c + b a0) alpha|. Same conclusion as T2.
 */

#include "tpzeros/recurrence.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tpz {

enum class Theorem { T1, T2, T3, None };
enum class Locus { OutsideOpenBall, InsideClosedBall, Unknown };
enum class RoucheRegime { ACNeg, ACPosCDNonneg, ACPosCDNeg };

std::string_view to_string(Theorem t);
std::string_view to_string(Locus l);
std::string_view to_string(RoucheRegime r);

struct HypothesisRecord {
    std::string condition;
    double value = 0.0;
    bool satisfied = false;
};

struct Classification {
    Theorem theorem = Theorem::None;
    double critical_radius = 0.0;
    Locus predicted_locus = Locus::Unknown;
    bool exceptional_zero_predicted = false;
    std::vector<HypothesisRecord> hypothesis_trace;
};

/// Condition names used in the hypothesis trace. Every condition is always
/// evaluated and recorded, in this order.
namespace cond {
inline constexpr std::string_view ac_negative = "ac < 0";
inline constexpr std::string_view ac_positive = "ac > 0";
inline constexpr std::string_view disc_positive = "b^2 - 4ac > 0";
inline constexpr std::string_view sign_nonneg = "a0*b*(a1*c + b*a0) >= 0";
inline constexpr std::string_view sign_nonpos = "a0*b*(a1*c + b*a0) <= 0";
inline constexpr std::string_view exceptional = "|a1*c + b*a0| > |a*alpha*a0|";
inline constexpr std::string_view t3_dominance = "|a0*c| > |(a1*c + b*a0)*alpha|";
} // namespace cond

Classification classify(const RecurrenceSpec& spec, const CharacteristicData& ch);

/// Re-derives the label from a trace alone.
Theorem theorem_from_trace(const std::vector<HypothesisRecord>& trace);

/// Number of zeros of H_m in |z| <= t2 for ac < 0, C*D >= 0: m - 1 when
/// |C| > |D| t2, m otherwise. Throws Error{OutOfTheoremScope} otherwise.
std::size_t predicted_inside_count_H(const CharacteristicData& ch, std::size_t m);

/// min(0.01, (t2 - 1)/10).
double default_epsilon(const CharacteristicData& ch);

/// Samples the circle |z| = t2 + eps (ACNeg) or t2 - eps (ACPos regimes) at
/// n_samples equally spaced angles starting at 0 and compares
///   L(z) = |z^{m+1} (t1 - t2)(C + D z)|
///   R(z) = |t2^{m+1}(1 - z t2)(C t1 + D) + t1^{m+1}(z t1 - 1)(C t2 + D)|.
/// Returns min(L - R) for ACNeg and min(R - L) otherwise, both divided by
/// t2^{m+1} so large m stays in range. Positive means the strict inequality
/// held at every sample. For ACPosCDNeg, (C, D) is negated when D < 0.
///
/// Throws Error{RegimeMismatch} if ch does not satisfy the regime's
/// hypotheses, Error{PreconditionViolated} for eps <= 0, eps >= t2 on an
/// inner circle, or n_samples < 8.
double rouche_margin(const CharacteristicData& ch, std::size_t m, double epsilon, std::size_t n_samples,
                     RoucheRegime regime);

/// True when ch satisfies the regime's hypotheses.
bool regime_applies(const CharacteristicData& ch, RoucheRegime regime);

} // namespace tpz
