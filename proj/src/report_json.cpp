#include "tpzeros/report_json.hpp"

namespace tpz::io {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json complex_list(const std::vector<cplx>& zs) {
    Json arr = Json::array();
    for (cplx z : zs)
        arr.push_back(to_json(z));
    return arr;
}

} // namespace

std::string_view to_string(PolyKind kind) {
    switch (kind) {
    case PolyKind::P: return "P";
    case PolyKind::PStar: return "PStar";
    case PolyKind::H: return "H";
    }
    return "P";
}

Json to_json(cplx z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const RecurrenceSpec& spec) {
    return Json{{"a", spec.a}, {"b", spec.b}, {"c", spec.c}, {"a0", spec.a0}, {"a1", spec.a1}};
}

Json to_json(const CharacteristicData& ch) {
    return Json{
        {"alpha", to_json(ch.alpha)},
        {"beta", to_json(ch.beta)},
        {"t1", to_json(ch.t1)},
        {"t2", to_json(ch.t2)},
        {"B", ch.B},
        {"C", ch.C},
        {"D", ch.D},
        {"discriminant", ch.discriminant},
        {"sign_ac", ch.sign_ac},
        {"critical_radius", ch.critical_radius},
    };
}

Json to_json(const PolynomialCoeffs& p) {
    return Json{{"kind", to_string(p.kind)}, {"m", p.m}, {"coeffs", p.coeffs}};
}

Json to_json(const RootSet& rs) {
    return Json{
        {"roots", complex_list(rs.roots)},
        {"residuals", rs.residuals},
        {"degree", rs.degree},
        {"trailing_zero_multiplicity", rs.trailing_zero_multiplicity},
    };
}

Json to_json(const DiskCount& dc) {
    return Json{
        {"inside", dc.inside},
        {"on_boundary", dc.on_boundary},
        {"outside", dc.outside},
        {"boundary_tolerance", dc.boundary_tolerance},
    };
}

Json to_json(const Classification& cls) {
    Json trace = Json::array();
    for (const HypothesisRecord& r : cls.hypothesis_trace)
        trace.push_back(Json{{"condition", r.condition}, {"value", r.value}, {"satisfied", r.satisfied}});
    return Json{
        {"theorem", tpz::to_string(cls.theorem)},
        {"critical_radius", cls.critical_radius},
        {"predicted_locus", tpz::to_string(cls.predicted_locus)},
        {"exceptional_zero_predicted", cls.exceptional_zero_predicted},
        {"hypothesis_trace", trace},
    };
}

Json to_json(const MRecord& rec) {
    return Json{
        {"m", rec.m},
        {"disk_count", to_json(rec.disk_count)},
        {"violations", complex_list(rec.violations)},
        {"exceptional_found", rec.exceptional_found},
        {"max_residual", rec.max_residual},
        {"passed", optional_json(rec.passed)},
    };
}

Json to_json(const CircleStat& st) {
    return Json{{"m", st.m}, {"median_distance", st.median_distance}, {"p80_distance", st.p80_distance}};
}

Json to_json(const VerificationReport& report) {
    Json per_m = Json::array();
    for (const MRecord& r : report.per_m)
        per_m.push_back(to_json(r));
    Json stats = Json::array();
    for (const CircleStat& s : report.circle_distance_stats)
        stats.push_back(to_json(s));
    return Json{
        {"spec", to_json(report.spec)},
        {"classification", to_json(report.classification)},
        {"boundary_rel_tol", report.boundary_rel_tol},
        {"per_m", per_m},
        {"empirical_threshold", optional_json(report.empirical_threshold)},
        {"circle_distance_stats", stats},
        {"circle_distance_note", "p80_distance is the largest distance among the 80% of zeros closest to the circle"},
    };
}

Json to_json(const InstanceOutcome& o) {
    Json counts = Json::array();
    for (const auto& [m, dc] : o.counts)
        counts.push_back(Json{{"m", m}, {"disk_count", to_json(dc)}});
    return Json{
        {"index", o.index},
        {"spec", to_json(o.spec)},
        {"theorem", tpz::to_string(o.theorem)},
        {"counts", counts},
        {"violating", o.violating},
        {"violation_magnitude", o.violation_magnitude},
        {"exceptional_missing", o.exceptional_missing},
        {"error", optional_json(o.error)},
    };
}

Json to_json(const SweepReport& report) {
    Json by_theorem = Json::object();
    for (const auto& [t, tally] : report.by_theorem) {
        by_theorem[std::string(tpz::to_string(t))] = Json{
            {"count", tally.count},
            {"n_violating_instances", tally.n_violating_instances},
            {"worst_violation_magnitude", tally.worst_violation_magnitude},
            {"n_failed", tally.n_failed},
            {"n_exceptional_predicted", tally.n_exceptional_predicted},
            {"n_exceptional_missing", tally.n_exceptional_missing},
        };
    }
    const auto list = [](const std::vector<InstanceOutcome>& xs) {
        Json arr = Json::array();
        for (const InstanceOutcome& o : xs)
            arr.push_back(to_json(o));
        return arr;
    };
    return Json{
        {"seed", report.seed},
        {"n_instances", report.n_instances},
        {"m_values", report.m_values},
        {"boundary_rel_tol", report.boundary_rel_tol},
        {"by_theorem", by_theorem},
        {"violating_instances", list(report.violating_instances)},
        {"exceptional_missing_instances", list(report.exceptional_missing_instances)},
        {"failed_instances", list(report.failed_instances)},
        {"samples_outside_hypotheses", list(report.samples_outside_hypotheses)},
    };
}

cplx complex_from_json(const Json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

RootSet root_set_from_json(const Json& j) {
    RootSet rs;
    for (const Json& z : j.at("roots"))
        rs.roots.push_back(complex_from_json(z));
    rs.residuals = j.at("residuals").get<std::vector<double>>();
    rs.degree = j.at("degree").get<std::size_t>();
    rs.trailing_zero_multiplicity = j.at("trailing_zero_multiplicity").get<std::size_t>();
    return rs;
}

} // namespace tpz::io
