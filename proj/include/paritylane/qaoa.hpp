#pragma once

#include <map>
#include <optional>
#include <vector>

#include "paritylane/circuit.hpp"
#include "paritylane/lhz.hpp"
#include "paritylane/sim.hpp"
#include "paritylane/tracker.hpp"

namespace paritylane {

// H_P = sum_{j<k} J_jk Z_j Z_k + sum_j h_j Z_j
struct IsingProblem {
    unsigned n = 0;
    std::map<std::pair<unsigned, unsigned>, double> coupling;  // keys j < k
    std::vector<double> field;

    static IsingProblem make(unsigned n);
    void set_coupling(unsigned j, unsigned k, double v);
    double coupling_at(unsigned j, unsigned k) const;
    void validate() const;
};

struct QaoaParams {
    std::vector<double> betas;
    std::vector<double> gammas;
    unsigned p() const { return static_cast<unsigned>(betas.size()); }
    void validate() const;
};

enum class QaoaTopology { Linear, Ladder };

// One problem-unitary walk on the chain.  Rotations RZ(gamma*J) / RZ(gamma*h)
// fire once per Ising term at the line where the label first appears.
// Counts (first round): CNOTs (n-1)^2 at CNOT depth 2n-2, n(n+1)/2 rotations.
struct UpResult {
    Circuit circuit;                 // CNOTs + RZ rotations only
    SpanningLine final_line;
    std::size_t rounds_consumed;     // progression rounds used
};
UpResult synth_up_linear(const IsingProblem& problem, double gamma,
                         std::size_t round_offset = 0);

// Mixer on the current line: logical lines localized by CNOT conjugation
// (at most 2n-2 CNOTs in depth 4), one RX(beta) per logical qubit.
Circuit synth_ux_linear(const SpanningLine& line, double beta);

struct QaoaCircuit {
    Circuit circuit;
    std::vector<LabelSet> final_labels;  // frame for classical decode
    TrackerState tracker;                // full tracker (ladder: 2n qubits)
};

// Full QAOA circuit: H on every chain qubit, then p alternations of U_P and
// U_X.  Linear: n physical qubits.  Ladder: 2n physical qubits with rail
// copy, split walk, X-basis measurement of rail 2 and conditional-Z decode
// each round; final_labels cover rail 1.
QaoaCircuit synth_qaoa(const IsingProblem& problem, const QaoaParams& params,
                       QaoaTopology topology);

// Rail copy: rung CNOTs rail1_k -> rail2_k (rail-2 qubits must be empty).
Circuit ladder_copy(unsigned n);

// Measurement decode fragment for a 2n-qubit tracker whose rail-2 labels are
// expressible over rail-1 labels: MEASURE_X on every rail-2 qubit and, per
// outcome bit, COND_Z on the rail-1 qubits whose labels XOR to the measured
// label.
struct LadderDecode {
    Circuit fragment;                        // MEASURE_X + COND_Z gates
    std::vector<std::uint64_t> supports;     // per rail-2 qubit, mask over rail-1
};
LadderDecode ladder_decode(const TrackerState& state);

// Dense reference: prod_j exp(i beta_j H_X) exp(i gamma_j H_P) |+>^n.
StateVector reference_state(const IsingProblem& problem, const QaoaParams& params);

double energy(const IsingProblem& problem, const StateVector& state);

// CNOT network (simulation aid, no topology limits) whose label action from
// the identity frame equals `labels`; applying it inverted decodes a
// synthesized state to the logical frame.
Circuit decode_network(const std::vector<LabelSet>& labels);

// Applies the inverse decode network to a synthesized state.
StateVector frame_decode(const StateVector& s, const std::vector<LabelSet>& labels);

}  // namespace paritylane
