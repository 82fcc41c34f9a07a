#include "tpzeros/verifier.hpp"

#include "tpzeros/error.hpp"
#include "tpzeros/polynomials.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace tpz {

namespace {

constexpr double kDiscriminantReject = 1e-9;

RootSet roots_of_taylor(const RecurrenceSpec& spec, std::size_t m) {
    const PolynomialCoeffs p = taylor_poly(spec, m);
    const bool constant = std::all_of(p.coeffs.begin() + 1, p.coeffs.end(), [](double v) { return v == 0.0; });
    if (constant) {
        RootSet rs;
        rs.degree = m;
        return rs;
    }
    return find_roots(p.coeffs);
}

struct Checked {
    MRecord record;
    double magnitude = 0.0; // worst relative distance of a violation from the circle
};

Checked check_m(const RootSet& rs, const Classification& cls, std::size_t m, double tol) {
    const double radius = cls.critical_radius;
    Checked out;
    MRecord& rec = out.record;
    rec.m = m;
    rec.disk_count = count_in_disk(rs, radius, tol);
    for (double r : rs.residuals)
        rec.max_residual = std::max(rec.max_residual, r);

    switch (cls.theorem) {
    case Theorem::T1: {
        std::vector<cplx> inside(rs.trailing_zero_multiplicity, cplx(0.0, 0.0));
        for (cplx z : rs.roots) {
            if (std::abs(z) < radius && std::abs(std::abs(z) - radius) > tol * radius)
                inside.push_back(z);
        }
        const std::size_t expected = cls.exceptional_zero_predicted ? 1 : 0;
        rec.exceptional_found = inside.size() == 1;
        rec.passed = inside.size() == expected;
        // inside is ordered by modulus; the first entry is the allowed exception.
        const std::size_t skip = std::min(expected, inside.size());
        rec.violations.assign(inside.begin() + static_cast<std::ptrdiff_t>(skip), inside.end());
        for (cplx z : rec.violations)
            out.magnitude = std::max(out.magnitude, (radius - std::abs(z)) / radius);
        break;
    }
    case Theorem::T2:
    case Theorem::T3: {
        for (cplx z : rs.roots) {
            if (std::abs(z) > radius * (1.0 + tol))
                rec.violations.push_back(z);
        }
        rec.passed = rec.violations.empty();
        for (cplx z : rec.violations)
            out.magnitude = std::max(out.magnitude, (std::abs(z) - radius) / radius);
        break;
    }
    case Theorem::None:
        break;
    }
    return out;
}

bool strictly_separated(const CharacteristicData& ch) {
    const double big = std::abs(ch.t2);
    const double small = std::abs(ch.t1);
    return big - small > 1e-12 * big;
}

CircleStat circle_stat(const RootSet& rs, double radius, std::size_t m) {
    std::vector<double> dist(rs.trailing_zero_multiplicity, radius);
    for (cplx z : rs.roots)
        dist.push_back(std::abs(std::abs(z) - radius));
    CircleStat st;
    st.m = m;
    if (dist.empty()) {
        st.median_distance = st.p80_distance = std::nan("");
        return st;
    }
    std::sort(dist.begin(), dist.end());
    const std::size_t n = dist.size();
    st.median_distance = n % 2 == 1 ? dist[n / 2] : 0.5 * (dist[n / 2 - 1] + dist[n / 2]);
    const auto keep = static_cast<std::size_t>(std::ceil(0.8 * static_cast<double>(n)));
    st.p80_distance = dist[std::max<std::size_t>(keep, 1) - 1];
    return st;
}

} // namespace

VerificationReport verify_instance(const RecurrenceSpec& spec, std::span<const std::size_t> m_values,
                                   double boundary_rel_tol) {
    const CharacteristicData ch = characteristic(spec);
    VerificationReport report;
    report.spec = spec;
    report.classification = classify(spec, ch);
    report.boundary_rel_tol = boundary_rel_tol;
    const bool separated = strictly_separated(ch);

    for (std::size_t m : m_values) {
        const RootSet rs = roots_of_taylor(spec, m);
        report.per_m.push_back(check_m(rs, report.classification, m, boundary_rel_tol).record);
        if (separated)
            report.circle_distance_stats.push_back(circle_stat(rs, ch.critical_radius, m));
    }

    if (report.classification.theorem != Theorem::None && !report.per_m.empty()) {
        std::vector<std::pair<std::size_t, bool>> by_m;
        for (const MRecord& r : report.per_m)
            by_m.emplace_back(r.m, r.passed.value_or(false));
        std::sort(by_m.begin(), by_m.end());
        std::optional<std::size_t> threshold;
        for (auto it = by_m.rbegin(); it != by_m.rend() && it->second; ++it)
            threshold = it->first;
        report.empirical_threshold = threshold;
    }
    return report;
}

std::optional<std::size_t> find_threshold_m(const RecurrenceSpec& spec, std::size_t m_max, double boundary_rel_tol) {
    if (m_max < 2)
        throw Error(ErrorCode::PreconditionViolated, "m_max must be at least 2");
    const CharacteristicData ch = characteristic(spec);
    const Classification cls = classify(spec, ch);
    if (cls.theorem == Theorem::None)
        throw Error(ErrorCode::PreconditionViolated, "no theorem applies to this spec");

    std::optional<std::size_t> threshold;
    for (std::size_t m = m_max; m >= 1; --m) {
        const RootSet rs = roots_of_taylor(spec, m);
        if (!check_m(rs, cls, m, boundary_rel_tol).record.passed.value_or(false))
            break;
        threshold = m;
    }
    return threshold;
}

std::vector<CircleStat> circle_convergence(const RecurrenceSpec& spec, std::span<const std::size_t> m_values) {
    const CharacteristicData ch = characteristic(spec);
    if (!strictly_separated(ch))
        throw Error(ErrorCode::PreconditionViolated, "circle convergence needs |t2| > |t1|");
    std::vector<CircleStat> out;
    for (std::size_t m : m_values)
        out.push_back(circle_stat(roots_of_taylor(spec, m), ch.critical_radius, m));
    return out;
}

ParamBox ParamBox::uniform(double lo, double hi) {
    ParamBox box;
    box.lo.fill(lo);
    box.hi.fill(hi);
    return box;
}

SpecSampler::SpecSampler(std::uint64_t seed, ParamBox box) : engine_(seed), box_(box) {}

double SpecSampler::uniform01() {
    // 53 random bits; identical across standard library implementations.
    return static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
}

RecurrenceSpec SpecSampler::next(const std::function<bool(const RecurrenceSpec&)>& accept) {
    for (;;) {
        std::array<double, 5> v{};
        for (std::size_t i = 0; i < 5; ++i)
            v[i] = box_.lo[i] + (box_.hi[i] - box_.lo[i]) * uniform01();
        const RecurrenceSpec s{v[0], v[1], v[2], v[3], v[4]};
        if (s.a == 0.0 || s.b == 0.0 || s.c == 0.0 || (s.a0 == 0.0 && s.a1 == 0.0))
            continue;
        if (std::abs(s.b * s.b - 4.0 * s.a * s.c) < kDiscriminantReject)
            continue;
        if (accept && !accept(s))
            continue;
        return s;
    }
}

namespace {

InstanceOutcome run_instance(std::size_t index, const RecurrenceSpec& spec, std::span<const std::size_t> m_values,
                             double tol) {
    InstanceOutcome out;
    out.index = index;
    out.spec = spec;
    try {
        const CharacteristicData ch = characteristic(spec);
        const Classification cls = classify(spec, ch);
        out.theorem = cls.theorem;
        for (std::size_t m : m_values) {
            const RootSet rs = roots_of_taylor(spec, m);
            const Checked c = check_m(rs, cls, m, tol);
            out.counts.emplace_back(m, c.record.disk_count);
            if (!c.record.violations.empty()) {
                out.violating = true;
                out.violation_magnitude = std::max(out.violation_magnitude, c.magnitude);
            }
            if (cls.exceptional_zero_predicted && !c.record.exceptional_found)
                out.exceptional_missing = true;
        }
    } catch (const Error& e) {
        out.counts.clear();
        out.violating = false;
        out.violation_magnitude = 0.0;
        out.error = std::string(to_string(e.code()));
    }
    return out;
}

} // namespace

SweepReport sweep_specs(std::span<const RecurrenceSpec> specs, std::span<const std::size_t> m_values,
                        double boundary_rel_tol, std::uint64_t seed) {
    std::vector<InstanceOutcome> outcomes(specs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++)
            outcomes[i] = run_instance(i, specs[i], m_values, boundary_rel_tol);
    };
    const std::size_t n_threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(specs.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < n_threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    SweepReport report;
    report.seed = seed;
    report.n_instances = specs.size();
    report.m_values.assign(m_values.begin(), m_values.end());
    report.boundary_rel_tol = boundary_rel_tol;
    for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::None})
        report.by_theorem[t] = {};

    for (const InstanceOutcome& o : outcomes) {
        TheoremTally& tally = report.by_theorem[o.theorem];
        ++tally.count;
        if (o.theorem == Theorem::T1) {
            const CharacteristicData ch = characteristic(o.spec);
            if (classify(o.spec, ch).exceptional_zero_predicted)
                ++tally.n_exceptional_predicted;
        }
        if (o.error) {
            ++tally.n_failed;
            report.failed_instances.push_back(o);
            continue;
        }
        if (o.theorem == Theorem::None) {
            report.samples_outside_hypotheses.push_back(o);
            continue;
        }
        if (o.exceptional_missing) {
            ++tally.n_exceptional_missing;
            report.exceptional_missing_instances.push_back(o);
        }
        if (o.violating) {
            ++tally.n_violating_instances;
            tally.worst_violation_magnitude = std::max(tally.worst_violation_magnitude, o.violation_magnitude);
            report.violating_instances.push_back(o);
        }
    }
    return report;
}

SweepReport sweep(std::uint64_t seed, std::size_t n, const ParamBox& box, std::span<const std::size_t> m_values,
                  double boundary_rel_tol) {
    SpecSampler sampler(seed, box);
    std::vector<RecurrenceSpec> specs;
    specs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        specs.push_back(sampler.next());
    return sweep_specs(specs, m_values, boundary_rel_tol, seed);
}

} // namespace tpz
