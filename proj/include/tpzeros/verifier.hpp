#pragma once

#include "tpzeros/classifier.hpp"
#include "tpzeros/recurrence.hpp"
#include "tpzeros/rootfinder.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace tpz {

inline constexpr double kDefaultBoundaryTol = 1e-8;
inline const std::vector<std::size_t> kDefaultMValues{10, 25, 50, 100};

struct MRecord {
    std::size_t m = 0;
    DiskCount disk_count;
    /// Roots contradicting the predicted locus. For T1 with a predicted
    /// exceptional zero the smallest inside root is the allowed exception
    /// and is not listed.
    std::vector<cplx> violations;
    bool exceptional_found = false;
    double max_residual = 0.0;
    /// Empty when the spec is classified None.
    std::optional<bool> passed;
};

struct CircleStat {
    std::size_t m = 0;
    double median_distance = 0.0;
    /// Largest distance among the 80% of roots closest to the circle.
    double p80_distance = 0.0;
};

struct VerificationReport {
    RecurrenceSpec spec;
    Classification classification;
    double boundary_rel_tol = kDefaultBoundaryTol;
    std::vector<MRecord> per_m;
    /// Least tested m such that every tested m' >= m passed.
    std::optional<std::size_t> empirical_threshold;
    /// Filled only when |t2| > |t1|.
    std::vector<CircleStat> circle_distance_stats;
};

/// Checks the classified conclusion on the zeros of P_m for each m.
///   T1:    passes iff the number of zeros strictly inside the open ball of
///          radius r* is 1 when an exceptional zero is predicted, else 0.
///   T2/T3: passes iff every zero has |z| <= r* (1 + boundary_rel_tol).
/// Zeros within the boundary band never count as violations.
VerificationReport verify_instance(const RecurrenceSpec& spec, std::span<const std::size_t> m_values,
                                   double boundary_rel_tol = kDefaultBoundaryTol);

/// Least m0 <= m_max such that every m in [m0, m_max] passes; every m in
/// [1, m_max] is tested. Throws Error{PreconditionViolated} for None
/// specs or m_max < 2.
std::optional<std::size_t> find_threshold_m(const RecurrenceSpec& spec, std::size_t m_max,
                                            double boundary_rel_tol = kDefaultBoundaryTol);

/// Median and 80th-percentile distance ||z| - r*| over all zeros of P_m.
/// Throws Error{PreconditionViolated} unless |t2| > |t1|.
std::vector<CircleStat> circle_convergence(const RecurrenceSpec& spec, std::span<const std::size_t> m_values);

/// Closed ranges per parameter, ordered (a, b, c, a0, a1).
struct ParamBox {
    std::array<double, 5> lo{-5, -5, -5, -5, -5};
    std::array<double, 5> hi{5, 5, 5, 5, 5};

    static ParamBox uniform(double lo, double hi);
};

/// Deterministic rejection sampler over a box. Rejects abc = 0,
/// (a0, a1) = (0, 0), |b^2 - 4ac| < 1e-9 and anything the filter refuses.
class SpecSampler {
public:
    SpecSampler(std::uint64_t seed, ParamBox box);

    RecurrenceSpec next(const std::function<bool(const RecurrenceSpec&)>& accept = {});

private:
    std::mt19937_64 engine_;
    ParamBox box_;

    double uniform01();
};

struct TheoremTally {
    std::size_t count = 0;
    std::size_t n_violating_instances = 0;
    double worst_violation_magnitude = 0.0;
    /// Instances excluded because root finding or sequence generation failed.
    std::size_t n_failed = 0;
    std::size_t n_exceptional_predicted = 0;
    /// T1 instances whose predicted exceptional zero was not yet strictly
    /// inside the ball at some tested m. Not a locus violation.
    std::size_t n_exceptional_missing = 0;
};

struct InstanceOutcome {
    std::size_t index = 0;
    RecurrenceSpec spec;
    Theorem theorem = Theorem::None;
    /// (m, disk count) per tested m; empty when failed.
    std::vector<std::pair<std::size_t, DiskCount>> counts;
    /// Some tested m produced a root contradicting the predicted locus.
    bool violating = false;
    double violation_magnitude = 0.0;
    bool exceptional_missing = false;
    std::optional<std::string> error;
};

struct SweepReport {
    std::uint64_t seed = 0;
    std::size_t n_instances = 0;
    std::vector<std::size_t> m_values;
    double boundary_rel_tol = kDefaultBoundaryTol;
    std::map<Theorem, TheoremTally> by_theorem;
    std::vector<InstanceOutcome> samples_outside_hypotheses;
    std::vector<InstanceOutcome> violating_instances;
    std::vector<InstanceOutcome> exceptional_missing_instances;
    std::vector<InstanceOutcome> failed_instances;
};

/// Samples n specs from box with the given seed and verifies each at
/// m_values. An instance is violating when some root contradicts the
/// predicted locus, after allowing the single T1 exceptional zero when the
/// predicate holds. Instances run on worker threads; results are merged by index
/// so the report is independent of scheduling.
SweepReport sweep(std::uint64_t seed, std::size_t n, const ParamBox& box, std::span<const std::size_t> m_values,
                  double boundary_rel_tol = kDefaultBoundaryTol);

/// Same as sweep() over an explicit list of specs.
SweepReport sweep_specs(std::span<const RecurrenceSpec> specs, std::span<const std::size_t> m_values,
                        double boundary_rel_tol = kDefaultBoundaryTol, std::uint64_t seed = 0);

} // namespace tpz
