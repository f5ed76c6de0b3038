#pragma once

#include <utility>
#include <vector>

#include "paritylane/labelset.hpp"

namespace paritylane {

using CnotList = std::vector<std::pair<unsigned, unsigned>>;  // (control, target)

// An assignment of labels to the n chain qubits carrying full logical
// information: rank n over GF(2), every label of weight 1 or 2.
struct SpanningLine {
    std::vector<LabelSet> labels;

    unsigned size() const { return static_cast<unsigned>(labels.size()); }
    bool valid() const;        // rank n and weights <= 2
    int rank() const;
};

SpanningLine base_line(unsigned n);
SpanningLine mirrored_line(const SpanningLine& line);

// Single deformation move: XOR the label at `position` with the labels of the
// given chain neighbours (each must be position +- 1).  Throws when the
// resulting label exceeds weight 2.  Returns the emitted CNOTs and new line.
std::pair<CnotList, SpanningLine> deform(const SpanningLine& line, unsigned position,
                                         const std::vector<unsigned>& neighbours);

// One depth-2 block of the progression: two layers of disjoint chain CNOTs.
struct ProgressionRound {
    CnotList layer1;
    CnotList layer2;
    SpanningLine line_after;
    CnotList all() const;
};

// A full progression step per the layout figure: two rounds (or one for a
// trailing half step).
struct ProgressionStep {
    std::vector<ProgressionRound> rounds;  // 1 or 2
    SpanningLine line_after;
};

enum class ScheduleVariant { QaoaLinear, Qft };

// The complete schedule: the starting zig-zag line, rounds, and per-round
// lines.  For QaoaLinear: n-1 rounds of n-1 CNOTs (total (n-1)^2, depth
// 2n-2) whose label union over all lines covers every single and pair.
// For Qft the walk is the staircase-entry / pair-op-sweep construction
// (n^2-1 CNOTs) ending at the mirrored base line; rounds then hold the
// depth-2 blocks of that stream.
struct ProgressionSchedule {
    unsigned n = 0;
    SpanningLine start;
    std::vector<ProgressionRound> rounds;
    std::vector<ProgressionStep> steps;   // rounds grouped 2 per full step

    std::vector<SpanningLine> lines() const;  // start + after each round
    std::size_t cnot_count() const;
    // Union of labels over all lines.
    std::vector<LabelSet> label_union() const;
};

ProgressionSchedule progression_schedule(unsigned n, ScheduleVariant variant);

// Continue the qaoa_linear walk from where a previous schedule stopped
// (round offset counts completed rounds since the zig-zag start).
ProgressionSchedule progression_schedule_from(unsigned n, std::size_t round_offset,
                                              std::size_t n_rounds);

namespace detail {
// The zig-zag starting wire order: tokens n-1..0 with the ground inserted at
// position n-2 (ground = token value n).
std::vector<unsigned> zigzag_wires(unsigned n);
unsigned first_parity(unsigned n);
SpanningLine gaps_of_wires(const std::vector<unsigned>& wires, unsigned n);
// Fan-out compilation of the transposition round at boundaries j == parity
// (mod 2): layer1 = (j -> j-1), layer2 = (j -> j+1).
std::pair<CnotList, CnotList> tau_round_layers(unsigned n, unsigned parity);
}  // namespace detail

}  // namespace paritylane
