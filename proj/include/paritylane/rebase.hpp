#pragma once

#include "paritylane/circuit.hpp"

namespace paritylane {

enum class GateSetTarget { CZ_H, CP_Y, ISWAP_PAIRING };

// Rewrites a CNOT-based circuit into the target gate set.
//   CZ_H:  each CNOT -> H(t) CZ H(t)
//   CP_Y:  each CNOT -> Y-rotation-dressed CP(pi) (RZ/RX words)
//   ISWAP_PAIRING: adjacent back-to-back CNOT pairs (same qubit pair,
//     exchanged roles, no intervening gate on either qubit) become a single
//     iSWAP plus single-qubit dressing; leftover CNOTs fall back to CZ_H.
// The result is unitarily equal to the input (up to global phase) and never
// has more entangling gates.
Circuit rebase(const Circuit& c, GateSetTarget target);

struct SavingsReport {
    long cnot_count = 0;
    long pairable = 0;           // back-to-back pairs found (greedy scan)
    long entangling_cz_h = 0;    // projected counts per target
    long entangling_cp_y = 0;
    long entangling_iswap = 0;
};

SavingsReport entangling_savings(const Circuit& c);

// Indices of greedily matched back-to-back pairs: (first gate, second gate).
std::vector<std::pair<std::size_t, std::size_t>> find_pairs(const Circuit& c);

}  // namespace paritylane
