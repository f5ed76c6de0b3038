#pragma once

#include <string>

#include "paritylane/circuit.hpp"

namespace paritylane {

// OpenQASM 2.0 subset: cx, rz, rx, h, cz, cu1, iswap (as a gate definition),
// h+measure for MEASURE_X, if(c==1) z for COND_Z.  Internal RZ(phi) =
// exp(i phi Z) exports as rz(-2 phi); RX likewise; CP(theta) as cu1(theta).
std::string to_qasm(const Circuit& c);

// Parses the subset emitted by to_qasm (round-trip checking aid).
Circuit from_qasm(const std::string& text);

}  // namespace paritylane
