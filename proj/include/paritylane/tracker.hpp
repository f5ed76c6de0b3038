#pragma once

#include <optional>
#include <vector>

#include "paritylane/circuit.hpp"
#include "paritylane/labelset.hpp"

namespace paritylane {

// Tracks the parity label of every physical qubit through CNOT circuits,
// together with the Z stabilizers seeded by empty qubits.  CNOT(c->t) maps
// labels[t] to the symmetric difference labels[c] ^ labels[t].
class TrackerState {
  public:
    // All qubits active: qubit a starts with label {a}.
    static TrackerState identity(unsigned n);

    // n_logical active qubits followed by n_empty empty qubits.
    static TrackerState with_empty(unsigned n_logical, unsigned n_empty);

    // Custom starting frame (rank must be n_logical over the active rows).
    static TrackerState from_labels(unsigned n_logical, std::vector<LabelSet> labels);

    unsigned n_logical() const { return n_logical_; }
    unsigned n_physical() const { return static_cast<unsigned>(labels_.size()); }
    const std::vector<LabelSet>& labels() const { return labels_; }

    void apply_cnot(unsigned control, unsigned target);

    // Z-string support of the logical operator implemented by a physical Z
    // rotation on this qubit (equals the tracked label).
    LabelSet logical_z_support(unsigned physical_qubit) const;

    // Physical qubits whose label contains logical index j; an X string on
    // these implements the logical X_j.
    std::vector<unsigned> logical_line(unsigned logical_index) const;

    // X-basis labels: the inverse transpose of the label matrix over GF(2).
    // Requires a square invertible label matrix.
    std::optional<std::vector<LabelSet>> x_basis_labels() const;

    // One Z-stabilizer generator per empty-initialized qubit: the physical
    // support of the evolved Z operator.
    struct Stabilizer {
        unsigned seed;                   // the empty qubit that seeded it
        std::vector<unsigned> support;   // physical qubits carrying a Z
    };
    std::vector<Stabilizer> stabilizer_supports() const;

    // Solve labels * x = measured over GF(2); bits are Z-measurement
    // outcomes per physical qubit.
    std::optional<std::vector<int>> decode_bitstring(const std::vector<int>& bits) const;

    int rank() const;

  private:
    unsigned n_logical_ = 0;
    std::vector<LabelSet> labels_;
    std::vector<unsigned> stab_seeds_;
    std::vector<std::uint64_t> stab_supports_;  // over physical qubits
};

// Snapshot granularity for track_circuit.
enum class TrackGranularity { PerGate, CommutingRound };

struct TrackSnapshot {
    std::size_t lambda;            // round index (0 = initial)
    std::vector<LabelSet> labels;  // per physical qubit
};

struct TrackResult {
    TrackerState final_state;
    std::vector<TrackSnapshot> history;
};

// Tracks a CNOT-only circuit.  Throws on non-CNOT unitary gates.  With
// CommutingRound granularity, consecutive mutually commuting CNOTs form one
// snapshot step; explicit boundaries (gate counts per round) override that.
TrackResult track_circuit(const Circuit& c, TrackerState initial,
                          TrackGranularity granularity = TrackGranularity::CommutingRound,
                          const std::vector<std::size_t>& boundaries = {});

}  // namespace paritylane
