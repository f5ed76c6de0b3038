#pragma once

#include "paritylane/circuit.hpp"
#include "paritylane/lhz.hpp"
#include "paritylane/tracker.hpp"

namespace paritylane {

// Textbook QFT on all-to-all connectivity: H_i followed by CP_{ij}(pi/2^{j-i})
// in circuit order, i = 0..n-1.
Circuit reference_qft(unsigned n);

// QFT on the linear chain via the label-tracking walk.  The output equals
// reference_qft(n) followed by the full qubit-order reversal, up to global
// phase.  Resource figures match the linear-chain table exactly:
//   CNOTs n^2-1, SQ gates (n^2+5n-4)/2, CNOT depth 4n-4, SQ depth n+1,
//   total depth 5n-3 (parallel SQ) / 6n-5 (serial SQ).
Circuit synth_qft(unsigned n);

// The plan behind synth_qft, exposed for tests: per-gate rotation placement.
struct QftPlan {
    Circuit circuit;
    std::vector<LabelSet> final_labels;  // reversed identity
};
QftPlan synth_qft_plan(unsigned n);

// Sums consecutive RZ contributions per physical qubit position between
// structural gates; angles normalized to (-pi, pi], rotations below 1e-14
// elided.  synth_qft already emits merged rotations; this pass is the
// general-circuit version.
Circuit merge_rotations(const Circuit& c);

}  // namespace paritylane
