#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "paritylane/lhz.hpp"
#include "paritylane/tracker.hpp"

using namespace paritylane;

TEST_CASE("base and mirrored lines") {
    SpanningLine b = base_line(3);
    CHECK(b.labels == std::vector<LabelSet>{LabelSet(1), LabelSet(2), LabelSet(4)});
    CHECK(mirrored_line(mirrored_line(b)).labels == b.labels);
    CHECK_THROWS(base_line(1));
    for (unsigned n : {5u, 64u}) {
        SpanningLine l = base_line(n);
        CHECK(l.valid());
        for (const auto& lab : l.labels) CHECK(lab.weight() == 1);
    }
}

TEST_CASE("deform moves") {
    // line [{0},{0,4},{1,4}]: middle deform with both neighbours -> {1}
    SpanningLine line;
    line.labels = {LabelSet(0b00001), LabelSet(0b10001), LabelSet(0b10010),
                   LabelSet::single(2), LabelSet::single(3)};
    auto [cnots, next] = deform(line, 1, {0, 2});
    CHECK(next.labels[1] == LabelSet::single(1));
    CHECK(cnots.size() == 2);
    // boundary deform {0} with neighbour {1} -> {0,1}
    auto [c2, next2] = deform(next, 0, {1});
    CHECK(next2.labels[0] == LabelSet(0b00011));
    // illegal: joint deform to weight 3
    SpanningLine bad = base_line(3);
    CHECK_THROWS(deform(bad, 1, {0, 2}));
}

TEST_CASE("qaoa_linear schedule counts, coverage, legality") {
    for (unsigned n = 2; n <= 10; ++n) {
        auto sched = progression_schedule(n, ScheduleVariant::QaoaLinear);
        CHECK(sched.cnot_count() == (n - 1) * (n - 1));
        CHECK(sched.rounds.size() == n - 1);
        for (const auto& line : sched.lines()) {
            CHECK(line.rank() == static_cast<int>(n));
            for (const auto& l : line.labels) {
                CHECK(l.weight() >= 1);
                CHECK(l.weight() <= 2);
            }
        }
        CHECK(sched.label_union().size() == n * (n + 1) / 2);
        // per-round CNOT count and depth-2 layering
        for (const auto& r : sched.rounds) {
            CHECK(r.layer1.size() + r.layer2.size() == n - 1);
            std::set<unsigned> l1, l2;
            for (auto [c, t] : r.layer1) { CHECK(!l1.count(c)); CHECK(!l1.count(t)); l1.insert(c); l1.insert(t); }
            for (auto [c, t] : r.layer2) { CHECK(!l2.count(c)); CHECK(!l2.count(t)); l2.insert(c); l2.insert(t); }
        }
        // half-step structure: even n ends with a single-round step
        if (n % 2 == 0) CHECK(sched.steps.back().rounds.size() == 1);
        else CHECK(sched.steps.back().rounds.size() == 2);
    }
    // specific small cases from the construction
    auto s3 = progression_schedule(3, ScheduleVariant::QaoaLinear);
    CHECK(s3.cnot_count() == 4);
    auto s5 = progression_schedule(5, ScheduleVariant::QaoaLinear);
    CHECK(s5.cnot_count() == 16);
    auto s6 = progression_schedule(6, ScheduleVariant::QaoaLinear);
    CHECK(s6.cnot_count() == 25);
}

TEST_CASE("schedule rounds reproduce their claimed lines through the tracker") {
    for (unsigned n : {3u, 5u, 8u}) {
        auto sched = progression_schedule(n, ScheduleVariant::QaoaLinear);
        TrackerState s = TrackerState::from_labels(n, sched.start.labels);
        for (const auto& r : sched.rounds) {
            for (auto [c, t] : r.all()) s.apply_cnot(c, t);
            CHECK(s.labels() == r.line_after.labels);
        }
    }
}

TEST_CASE("continuing a full period returns to the base-line label multiset") {
    for (unsigned n : {3u, 4u, 5u, 6u}) {
        auto sched = progression_schedule_from(n, 0, 2 * (n + 1));
        std::multiset<std::uint64_t> start_multiset, end_multiset;
        for (const auto& l : sched.start.labels) start_multiset.insert(l.mask());
        for (const auto& l : sched.rounds.back().line_after.labels) end_multiset.insert(l.mask());
        CHECK(start_multiset == end_multiset);
    }
}

TEST_CASE("every window of n-1 rounds covers all singles and pairs") {
    for (unsigned n : {3u, 5u, 6u, 9u}) {
        for (std::size_t off = 0; off < 2 * n; ++off) {
            auto sched = progression_schedule_from(n, off, n - 1);
            CHECK(sched.label_union().size() == n * (n + 1) / 2);
        }
    }
}

TEST_CASE("qft walk ends at the mirrored base line") {
    for (unsigned n = 2; n <= 12; ++n) {
        auto sched = progression_schedule(n, ScheduleVariant::Qft);
        CHECK(sched.cnot_count() == n * n - 1);
        SpanningLine want = mirrored_line(base_line(n));
        CHECK(sched.rounds.back().line_after.labels == want.labels);
        // all labels stay weight <= 2 on round boundaries
        for (const auto& line : sched.lines())
            for (const auto& l : line.labels) CHECK(l.weight() <= 2);
        CHECK(sched.rounds.size() == 2 * n - 2);
    }
}
