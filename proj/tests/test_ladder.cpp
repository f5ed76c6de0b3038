#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paritylane/qaoa.hpp"
#include "paritylane/resources.hpp"

using namespace paritylane;

namespace {

IsingProblem random_problem(unsigned n, std::mt19937_64& rng) {
    IsingProblem p = IsingProblem::make(n);
    std::normal_distribution<double> d(0.0, 1.0);
    for (unsigned i = 0; i < n; ++i) {
        p.field[i] = d(rng);
        for (unsigned j = i + 1; j < n; ++j) p.set_coupling(i, j, d(rng));
    }
    return p;
}

// rail-2 qubits are in X eigenstates after measurement; slice out rail 1
StateVector extract_rail1(const StateVector& s, unsigned n) {
    const std::size_t dim1 = std::size_t{1} << n;
    // find the dominant rail-2 X-basis pattern by hadamarding rail 2
    StateVector h = s;
    for (unsigned k = 0; k < n; ++k) h.apply_h(static_cast<int>(n + k));
    std::size_t best = 0;
    double bw = -1;
    for (std::size_t hi = 0; hi < dim1; ++hi) {
        double w = 0;
        for (std::size_t lo = 0; lo < dim1; ++lo) w += std::norm(h[(hi << n) | lo]);
        if (w > bw) { bw = w; best = hi; }
    }
    StateVector out(static_cast<int>(n));
    for (std::size_t lo = 0; lo < dim1; ++lo) out[lo] = h[(best << n) | lo];
    out.normalize();
    return out;
}

}  // namespace

TEST_CASE("ladder copy basics") {
    Circuit c = ladder_copy(3);
    CHECK(c.size() == 3);
    CHECK(resource_report(c).cnot_depth_measured == 1);
    TrackerState s = TrackerState::with_empty(3, 3);
    for (const auto& g : c.gates())
        s.apply_cnot(static_cast<unsigned>(g.q0), static_cast<unsigned>(g.q1));
    for (unsigned k = 0; k < 3; ++k) CHECK(s.labels()[3 + k] == s.labels()[k]);
    auto st = s.stabilizer_supports();
    REQUIRE(st.size() == 3);
    for (const auto& g : st) CHECK(g.support.size() == 2);
}

TEST_CASE("ladder decode rule validates branch-exhaustively") {
    std::mt19937_64 rng(21);
    for (unsigned n = 2; n <= 4; ++n) {
        IsingProblem p = random_problem(n, rng);
        QaoaParams params{{0.45}, {0.7}};
        QaoaCircuit lad = synth_qaoa(p, params, QaoaTopology::Ladder);
        QaoaCircuit lin = synth_qaoa(p, params, QaoaTopology::Linear);
        StateVector lin_out = run_pure(lin.circuit, StateVector(static_cast<int>(n)));
        StateVector lin_dec = frame_decode(lin_out, lin.final_labels);

        auto branches = run(lad.circuit, StateVector(static_cast<int>(2 * n)));
        CHECK(branches.size() == (std::size_t{1} << n));
        double ptot = 0;
        for (const auto& br : branches) {
            ptot += br.probability;
            StateVector rail1 = extract_rail1(br.state, n);
            StateVector dec = frame_decode(rail1, lad.final_labels);
            auto eq = equiv_global_phase(dec, lin_dec, 1e-9);
            CHECK(eq.equal);
        }
        CHECK(ptot == doctest::Approx(1.0));
    }
}

TEST_CASE("ladder matches dense reference across random branches n=5") {
    std::mt19937_64 rng(22);
    unsigned n = 5;
    IsingProblem p = random_problem(n, rng);
    QaoaParams params{{-0.3}, {0.55}};
    QaoaCircuit lad = synth_qaoa(p, params, QaoaTopology::Ladder);
    StateVector ref = reference_state(p, params);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        RunOptions opts;
        opts.policy = OutcomePolicy::Random;
        opts.seed = seed;
        auto branches = run(lad.circuit, StateVector(static_cast<int>(2 * n)), opts);
        REQUIRE(branches.size() == 1);
        StateVector rail1 = extract_rail1(branches[0].state, n);
        StateVector dec = frame_decode(rail1, lad.final_labels);
        auto eq = equiv_global_phase(dec, ref, 1e-9);
        CHECK(eq.equal);
    }
}

TEST_CASE("ladder resources") {
    std::mt19937_64 rng(23);
    for (unsigned n = 2; n <= 12; ++n) {
        IsingProblem p = random_problem(n, rng);
        QaoaParams params{{0.2}, {0.4}};
        QaoaCircuit lad = synth_qaoa(p, params, QaoaTopology::Ladder);
        auto r = resource_report(lad.circuit);
        long ni = static_cast<long>(n);
        CHECK(r.cnot_count == ni * ni + ni - 1);
        CHECK(r.measurement_count == ni);
        CHECK(r.meas_depth_measured == 1);
        CHECK(r.cond_count <= ni * ni);
        CHECK(check_topology(lad.circuit, Topology::ladder(static_cast<int>(n))).empty());
        // measured entangling depth: copy + split walk + mixer
        long k1 = (ni - 1 + 1) / 2;
        CHECK(r.cnot_depth_measured <= 1 + 2 * k1 + 4);
    }
}

TEST_CASE("ladder p=2 stays correct") {
    std::mt19937_64 rng(24);
    unsigned n = 3;
    IsingProblem p = random_problem(n, rng);
    QaoaParams params{{0.45, -0.2}, {0.7, 0.3}};
    QaoaCircuit lad = synth_qaoa(p, params, QaoaTopology::Ladder);
    StateVector ref = reference_state(p, params);
    RunOptions opts;
    opts.policy = OutcomePolicy::Random;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        opts.seed = seed;
        auto branches = run(lad.circuit, StateVector(static_cast<int>(2 * n)), opts);
        REQUIRE(branches.size() == 1);
        StateVector rail1 = extract_rail1(branches[0].state, n);
        StateVector dec = frame_decode(rail1, lad.final_labels);
        auto eq = equiv_global_phase(dec, ref, 1e-9);
        CHECK(eq.equal);
    }
}
