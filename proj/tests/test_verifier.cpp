#include "tpzeros/error.hpp"
#include "tpzeros/verifier.hpp"

#include <doctest.h>

#include <cmath>

using namespace tpz;

namespace {

const RecurrenceSpec kExceptional{5, 1, -1, 1, -3};
const RecurrenceSpec kNoExceptional{2, 1, -1, 2, 1};
const RecurrenceSpec kUnitBall{2, 5, 3, 1, -2};
const RecurrenceSpec kHalfBall{2, -3, 1, 2, 5};

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected tpz::Error");
    return ErrorCode::PreconditionViolated;
}

bool same_outcome(const InstanceOutcome& x, const InstanceOutcome& y) {
    if (x.index != y.index || !(x.spec == y.spec) || x.theorem != y.theorem || x.violating != y.violating ||
        x.violation_magnitude != y.violation_magnitude || x.error != y.error || x.counts.size() != y.counts.size())
        return false;
    for (std::size_t k = 0; k < x.counts.size(); ++k) {
        const auto& [m1, d1] = x.counts[k];
        const auto& [m2, d2] = y.counts[k];
        if (m1 != m2 || d1.inside != d2.inside || d1.on_boundary != d2.on_boundary || d1.outside != d2.outside)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("verify_instance on the reference specs") {
    const std::vector<std::size_t> m10{10};

    const auto r1 = verify_instance(kExceptional, m10);
    REQUIRE(r1.per_m.size() == 1);
    CHECK(r1.classification.theorem == Theorem::T1);
    CHECK(r1.per_m[0].disk_count.inside == 1);
    CHECK(r1.per_m[0].disk_count.on_boundary + r1.per_m[0].disk_count.outside == 9);
    CHECK(r1.per_m[0].exceptional_found);
    CHECK(r1.per_m[0].violations.empty());
    CHECK(r1.per_m[0].passed == true);
    CHECK(r1.classification.critical_radius == doctest::Approx(0.3583).epsilon(1e-3));

    const auto r2 = verify_instance(kNoExceptional, m10);
    CHECK(r2.per_m[0].disk_count.inside == 0);
    CHECK(r2.per_m[0].passed == true);

    const auto r3 = verify_instance(kUnitBall, m10);
    CHECK(r3.per_m[0].disk_count.outside == 0);
    CHECK(r3.per_m[0].disk_count.inside + r3.per_m[0].disk_count.on_boundary == 10);
    CHECK(r3.per_m[0].passed == true);

    const auto r4 = verify_instance(kHalfBall, m10);
    CHECK(r4.per_m[0].disk_count.outside == 0);
    CHECK(r4.per_m[0].passed == true);
    CHECK(r4.per_m[0].max_residual <= 1e-12);

    SUBCASE("None specs are recorded without a verdict") {
        const auto rn = verify_instance({1, 1, 1, 1, 1}, m10);
        CHECK(rn.classification.theorem == Theorem::None);
        CHECK_FALSE(rn.per_m[0].passed.has_value());
        CHECK_FALSE(rn.empirical_threshold.has_value());
        CHECK(rn.circle_distance_stats.empty());
    }

    SUBCASE("threshold over several m") {
        const std::vector<std::size_t> ms{10, 25, 50, 100};
        const auto r = verify_instance(kUnitBall, ms);
        CHECK(r.empirical_threshold == 10u);
        CHECK(r.circle_distance_stats.size() == 4);
    }
}

TEST_CASE("find_threshold_m") {
    const auto t1 = find_threshold_m(kNoExceptional, 60);
    REQUIRE(t1.has_value());
    CHECK(*t1 <= 10);
    const auto t2 = find_threshold_m(kUnitBall, 60);
    REQUIRE(t2.has_value());
    CHECK(*t2 <= 10);
    CHECK(code_of([] { find_threshold_m({1, 1, 1, 1, 1}, 60); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { find_threshold_m(kUnitBall, 1); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("circle_convergence") {
    const std::vector<std::size_t> ms{20, 40, 80};
    const auto s1 = circle_convergence(kUnitBall, ms);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0].median_distance > s1[1].median_distance);
    CHECK(s1[1].median_distance > s1[2].median_distance);

    const auto s2 = circle_convergence(kExceptional, ms);
    CHECK(s2[0].p80_distance > s2[1].p80_distance);
    CHECK(s2[1].p80_distance > s2[2].p80_distance);
    for (const auto& st : s2)
        CHECK(st.median_distance <= st.p80_distance);

    CHECK(code_of([&] { circle_convergence({1, 1, 1, 1, 1}, ms); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("SpecSampler stays in the box and is reproducible") {
    ParamBox box = ParamBox::uniform(-2, 3);
    SpecSampler a(77, box);
    SpecSampler b(77, box);
    for (int i = 0; i < 200; ++i) {
        const auto s = a.next();
        CHECK(s == b.next());
        for (double v : {s.a, s.b, s.c, s.a0, s.a1}) {
            CHECK(v >= -2);
            CHECK(v <= 3);
        }
        CHECK(s.a * s.b * s.c != 0);
        CHECK(std::abs(s.b * s.b - 4 * s.a * s.c) >= 1e-9);
    }
    SpecSampler f(78, box);
    for (int i = 0; i < 20; ++i) {
        const auto s = f.next([](const RecurrenceSpec& t) { return t.a * t.c > 0; });
        CHECK(s.a * s.c > 0);
    }
}

TEST_CASE("sweep") {
    const std::vector<std::size_t> ms{20, 40};
    const auto box = ParamBox{};

    SUBCASE("identical seeds give identical reports") {
        const auto x = sweep(9, 120, box, ms);
        const auto y = sweep(9, 120, box, ms);
        CHECK(x.n_instances == 120);
        REQUIRE(x.by_theorem.size() == y.by_theorem.size());
        std::size_t total = 0;
        for (const auto& [th, tally] : x.by_theorem) {
            const auto& other = y.by_theorem.at(th);
            CHECK(tally.count == other.count);
            CHECK(tally.n_violating_instances == other.n_violating_instances);
            CHECK(tally.worst_violation_magnitude == other.worst_violation_magnitude);
            CHECK(tally.n_failed == other.n_failed);
            total += tally.count;
        }
        CHECK(total == 120);
        REQUIRE(x.samples_outside_hypotheses.size() == y.samples_outside_hypotheses.size());
        for (std::size_t k = 0; k < x.samples_outside_hypotheses.size(); ++k)
            CHECK(same_outcome(x.samples_outside_hypotheses[k], y.samples_outside_hypotheses[k]));
        for (std::size_t k = 1; k < x.samples_outside_hypotheses.size(); ++k)
            CHECK(x.samples_outside_hypotheses[k - 1].index < x.samples_outside_hypotheses[k].index);
    }

    SUBCASE("one forced T2 spec") {
        const std::vector<RecurrenceSpec> specs{kUnitBall};
        const auto r = sweep_specs(specs, ms);
        CHECK(r.n_instances == 1);
        CHECK(r.by_theorem.at(Theorem::T2).count == 1);
        CHECK(r.by_theorem.at(Theorem::T2).n_violating_instances == 0);
        CHECK(r.violating_instances.empty());
    }

    SUBCASE("reference specs pass") {
        const std::vector<RecurrenceSpec> specs{kExceptional, kNoExceptional, kUnitBall, kHalfBall};
        const auto r = sweep_specs(specs, std::vector<std::size_t>{50, 100});
        CHECK(r.by_theorem.at(Theorem::T1).count == 2);
        CHECK(r.by_theorem.at(Theorem::T1).n_exceptional_predicted == 1);
        CHECK(r.by_theorem.at(Theorem::T3).count == 1);
        CHECK(r.violating_instances.empty());
        CHECK(r.failed_instances.empty());
    }
}
