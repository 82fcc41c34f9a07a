#include "tpzeros/classifier.hpp"

#include "tpzeros/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tpz {

std::string_view to_string(Theorem t) {
    switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::None: return "None";
    }
    return "None";
}

std::string_view to_string(Locus l) {
    switch (l) {
    case Locus::OutsideOpenBall: return "OutsideOpenBall";
    case Locus::InsideClosedBall: return "InsideClosedBall";
    case Locus::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string_view to_string(RoucheRegime r) {
    switch (r) {
    case RoucheRegime::ACNeg: return "ACNeg";
    case RoucheRegime::ACPosCDNonneg: return "ACPosCDNonneg";
    case RoucheRegime::ACPosCDNeg: return "ACPosCDNeg";
    }
    return "ACNeg";
}

namespace {

bool satisfied(const std::vector<HypothesisRecord>& trace, std::string_view name) {
    const auto it = std::find_if(trace.begin(), trace.end(),
                                 [&](const HypothesisRecord& r) { return r.condition == name; });
    return it != trace.end() && it->satisfied;
}

} // namespace

Theorem theorem_from_trace(const std::vector<HypothesisRecord>& trace) {
    if (satisfied(trace, cond::ac_negative))
        return satisfied(trace, cond::sign_nonneg) ? Theorem::T1 : Theorem::None;
    if (!satisfied(trace, cond::ac_positive) || !satisfied(trace, cond::disc_positive))
        return Theorem::None;
    if (satisfied(trace, cond::sign_nonpos))
        return Theorem::T2;
    return satisfied(trace, cond::t3_dominance) ? Theorem::T3 : Theorem::None;
}

Classification classify(const RecurrenceSpec& spec, const CharacteristicData& ch) {
    const auto& [a, b, c, a0, a1] = spec;
    const double ac = a * c;
    const double shifted = a1 * c + b * a0;
    const double product = a0 * b * shifted;
    const double abs_alpha = std::abs(ch.alpha);
    const double exc_lhs = std::abs(shifted);
    const double exc_rhs = std::abs(a * a0) * abs_alpha;
    const double t3_lhs = std::abs(a0 * c);
    const double t3_rhs = std::abs(shifted) * abs_alpha;

    Classification out;
    out.critical_radius = ch.critical_radius;
    auto& trace = out.hypothesis_trace;
    trace.push_back({std::string(cond::ac_negative), ac, ac < 0.0});
    trace.push_back({std::string(cond::ac_positive), ac, ac > 0.0});
    trace.push_back({std::string(cond::disc_positive), ch.discriminant, ch.discriminant > 0.0});
    trace.push_back({std::string(cond::sign_nonneg), product, product >= 0.0});
    trace.push_back({std::string(cond::sign_nonpos), product, product <= 0.0});
    trace.push_back({std::string(cond::exceptional), exc_lhs - exc_rhs, exc_lhs > exc_rhs});
    trace.push_back({std::string(cond::t3_dominance), t3_lhs - t3_rhs, t3_lhs > t3_rhs});

    out.theorem = theorem_from_trace(trace);
    switch (out.theorem) {
    case Theorem::T1:
        out.predicted_locus = Locus::OutsideOpenBall;
        out.exceptional_zero_predicted = exc_lhs > exc_rhs;
        break;
    case Theorem::T2:
    case Theorem::T3:
        out.predicted_locus = Locus::InsideClosedBall;
        break;
    case Theorem::None:
        out.predicted_locus = Locus::Unknown;
        break;
    }
    return out;
}

std::size_t predicted_inside_count_H(const CharacteristicData& ch, std::size_t m) {
    if (ch.sign_ac > 0)
        throw Error(ErrorCode::OutOfTheoremScope, "inside count for H_m is derived only for ac < 0");
    if (ch.C * ch.D < 0.0)
        throw Error(ErrorCode::OutOfTheoremScope, "inside count for H_m needs C*D >= 0");
    const double t2 = ch.t2.real();
    if (std::abs(ch.C) > std::abs(ch.D) * t2)
        return m == 0 ? 0 : m - 1;
    return m;
}

double default_epsilon(const CharacteristicData& ch) {
    return std::min(0.01, (std::abs(ch.t2) - 1.0) / 10.0);
}

bool regime_applies(const CharacteristicData& ch, RoucheRegime regime) {
    const double cd = ch.C * ch.D;
    switch (regime) {
    case RoucheRegime::ACNeg:
        return ch.sign_ac < 0 && cd >= 0.0;
    case RoucheRegime::ACPosCDNonneg:
        return ch.sign_ac > 0 && ch.discriminant > 0.0 && cd >= 0.0;
    case RoucheRegime::ACPosCDNeg: {
        if (ch.sign_ac < 0 || !(ch.discriminant > 0.0) || !(cd < 0.0))
            return false;
        const double flip = ch.D < 0.0 ? -1.0 : 1.0;
        return flip * ch.D + flip * ch.C * ch.t2.real() > 0.0;
    }
    }
    return false;
}

double rouche_margin(const CharacteristicData& ch, std::size_t m, double epsilon, std::size_t n_samples,
                     RoucheRegime regime) {
    if (!regime_applies(ch, regime))
        throw Error(ErrorCode::RegimeMismatch,
                    "characteristic data does not satisfy the " + std::string(to_string(regime)) + " hypotheses");
    if (n_samples < 8)
        throw Error(ErrorCode::PreconditionViolated, "need at least 8 circle samples");
    const double t1 = ch.t1.real();
    const double t2 = ch.t2.real();
    const bool outer = regime == RoucheRegime::ACNeg;
    if (!(epsilon > 0.0) || (!outer && epsilon >= t2))
        throw Error(ErrorCode::PreconditionViolated, "epsilon must lie in (0, t2)");

    double C = ch.C;
    double D = ch.D;
    if (regime == RoucheRegime::ACPosCDNeg && D < 0.0) {
        C = -C;
        D = -D;
    }

    const double radius = outer ? t2 + epsilon : t2 - epsilon;
    const double exponent = static_cast<double>(m + 1);
    const double ratio_pow = std::pow(radius / t2, exponent);
    const double t1_pow = std::pow(t1 / t2, exponent);

    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_samples);
        const cplx u = std::polar(1.0, theta);
        const cplx z = radius * u;
        // (z/t2)^{m+1} = (radius/t2)^{m+1} u^{m+1}; |u^{m+1}| = 1.
        const double lhs = ratio_pow * std::abs((t1 - t2) * (C + D * z));
        const double rhs = std::abs((1.0 - z * t2) * (C * t1 + D) + t1_pow * (z * t1 - 1.0) * (C * t2 + D));
        margin = std::min(margin, outer ? lhs - rhs : rhs - lhs);
    }
    return margin;
}

} // namespace tpz
