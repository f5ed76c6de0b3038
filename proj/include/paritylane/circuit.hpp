#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace paritylane {

// Gate kinds.  Rotation convention: RZ(phi) = exp(i phi Z), RX(theta) =
// exp(i theta X).  QASM export converts to the rz/rx little-angle forms
// (rz(lambda) = exp(-i lambda Z / 2)), i.e. lambda = -2 phi.
enum class GateKind { CNOT, RZ, RX, H, CP, CZ, ISWAP, MEASURE_X, COND_Z };

struct Gate {
    GateKind kind;
    int q0 = -1;         // control for CNOT; first qubit otherwise
    int q1 = -1;         // target for CNOT; second qubit for 2q gates
    double angle = 0.0;  // RZ/RX/CP only
    int cbit = -1;       // MEASURE_X / COND_Z only

    static Gate cnot(int control, int target) { return {GateKind::CNOT, control, target}; }
    static Gate rz(int q, double phi) { return {GateKind::RZ, q, -1, phi}; }
    static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
    static Gate h(int q) { return {GateKind::H, q}; }
    static Gate cp(int a, int b, double theta) { return {GateKind::CP, a, b, theta}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b}; }
    static Gate iswap(int a, int b) { return {GateKind::ISWAP, a, b}; }
    static Gate measure_x(int q, int c) { return {GateKind::MEASURE_X, q, -1, 0.0, c}; }
    static Gate cond_z(int q, int c) { return {GateKind::COND_Z, q, -1, 0.0, c}; }

    bool is_two_qubit() const {
        return kind == GateKind::CNOT || kind == GateKind::CP || kind == GateKind::CZ ||
               kind == GateKind::ISWAP;
    }
    bool is_single_qubit() const {
        return kind == GateKind::RZ || kind == GateKind::RX || kind == GateKind::H;
    }
    bool is_measurement() const {
        return kind == GateKind::MEASURE_X || kind == GateKind::COND_Z;
    }
    bool operator==(const Gate& o) const;
};

// Depth figures the synthesizer declares for its own output, following the
// round accounting of the source construction (a commuting CNOT round counts
// as depth 2 regardless of occupancy).  resource_report() validates these
// against measured schedules and reports both.
struct DepthConvention {
    int cnot_depth = 0;
    int sq_depth = 0;
    int meas_depth = 0;
    int serial_sq_depth = 0;
};

class Circuit {
  public:
    Circuit(int n_qubits, int n_cbits = 0);

    int n_qubits() const { return n_qubits_; }
    int n_cbits() const { return n_cbits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    // Appends with index validation; COND_Z requires its cbit to have been
    // written by an earlier MEASURE_X.
    void append(const Gate& g);
    void append(const Circuit& other);

    bool has_measurement() const;

    // Reversed gate order with per-gate inverses.  Throws when measurements
    // are present.
    Circuit inverse() const;

    std::optional<DepthConvention> convention;

  private:
    int n_qubits_;
    int n_cbits_;
    std::vector<Gate> gates_;
    std::vector<bool> cbit_written_;
};

struct Topology {
    enum class Kind { Linear, Ladder, AllToAll };
    Kind kind;
    int n;  // linear: chain qubits; ladder: logical columns (2n physical)

    static Topology linear(int n) { return {Kind::Linear, n}; }
    static Topology ladder(int n) { return {Kind::Ladder, n}; }
    static Topology all_to_all(int n) { return {Kind::AllToAll, n}; }

    int n_physical() const { return kind == Kind::Ladder ? 2 * n : n; }
    bool has_edge(int a, int b) const;
};

struct TopologyViolation {
    std::size_t gate_index;
    Gate gate;
};

std::vector<TopologyViolation> check_topology(const Circuit& c, const Topology& t);

}  // namespace paritylane
