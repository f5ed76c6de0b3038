#include "paritylane/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace paritylane {

bool Gate::operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && cbit == o.cbit &&
           std::abs(angle - o.angle) < 1e-15;
}

Circuit::Circuit(int n_qubits, int n_cbits) : n_qubits_(n_qubits), n_cbits_(n_cbits) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
    if (n_cbits < 0) throw std::invalid_argument("negative cbit count");
    cbit_written_.assign(static_cast<std::size_t>(n_cbits), false);
}

void Circuit::append(const Gate& g) {
    auto check_q = [&](int q) {
        if (q < 0 || q >= n_qubits_) throw std::out_of_range("qubit index out of range");
    };
    check_q(g.q0);
    if (g.is_two_qubit()) {
        check_q(g.q1);
        if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    if (g.kind == GateKind::RZ || g.kind == GateKind::RX || g.kind == GateKind::CP) {
        if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite angle");
    }
    if (g.is_measurement()) {
        if (g.cbit < 0 || g.cbit >= n_cbits_) throw std::out_of_range("cbit out of range");
        if (g.kind == GateKind::MEASURE_X) {
            if (cbit_written_[static_cast<std::size_t>(g.cbit)])
                throw std::invalid_argument("cbit measured twice");
            cbit_written_[static_cast<std::size_t>(g.cbit)] = true;
        } else {
            if (!cbit_written_[static_cast<std::size_t>(g.cbit)])
                throw std::invalid_argument("COND_Z on unwritten cbit");
        }
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    for (const auto& g : other.gates()) append(g);
}

bool Circuit::has_measurement() const {
    for (const auto& g : gates_)
        if (g.is_measurement()) return true;
    return false;
}

Circuit Circuit::inverse() const {
    if (has_measurement())
        throw std::invalid_argument("circuit with measurements is not invertible");
    Circuit out(n_qubits_, n_cbits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::RZ:
            case GateKind::RX:
            case GateKind::CP:
                g.angle = -g.angle;
                break;
            case GateKind::ISWAP:
                // iswap^dag = iswap * (Z x Z), up to global phase
                out.append(Gate::rz(g.q0, M_PI / 2));
                out.append(Gate::rz(g.q1, M_PI / 2));
                out.append(g);
                continue;
            default:
                break;  // CNOT, H, CZ self-inverse
        }
        out.append(g);
    }
    return out;
}

bool Topology::has_edge(int a, int b) const {
    if (a == b) return false;
    switch (kind) {
        case Kind::AllToAll:
            return a >= 0 && b >= 0 && a < n && b < n;
        case Kind::Linear:
            return std::abs(a - b) == 1 && std::min(a, b) >= 0 && std::max(a, b) < n;
        case Kind::Ladder: {
            // qubits 0..n-1 = rail 1, n..2n-1 = rail 2; rungs (k, n+k)
            auto rail = [&](int q) { return q / n; };
            auto pos = [&](int q) { return q % n; };
            if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n) return false;
            if (rail(a) == rail(b)) return std::abs(pos(a) - pos(b)) == 1;
            return pos(a) == pos(b);
        }
    }
    return false;
}

std::vector<TopologyViolation> check_topology(const Circuit& c, const Topology& t) {
    std::vector<TopologyViolation> out;
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate& g = c.gates()[i];
        if (!g.is_two_qubit()) continue;
        if (!t.has_edge(g.q0, g.q1)) out.push_back({i, g});
    }
    return out;
}

}  // namespace paritylane
