#include "paritylane/resources.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace paritylane {

namespace {

std::vector<int> gate_qubits(const Gate& g) {
    if (g.is_two_qubit()) return {g.q0, g.q1};
    return {g.q0};
}

// ASAP depth of a gate subsequence: each qubit does one gate per step.
int asap_depth(const Circuit& c, bool (*select)(const Gate&)) {
    std::vector<int> busy(static_cast<std::size_t>(c.n_qubits()), 0);
    int depth = 0;
    for (const auto& g : c.gates()) {
        if (!select(g)) continue;
        int t = 0;
        for (int q : gate_qubits(g)) t = std::max(t, busy[static_cast<std::size_t>(q)]);
        ++t;
        for (int q : gate_qubits(g)) busy[static_cast<std::size_t>(q)] = t;
        depth = std::max(depth, t);
    }
    return depth;
}

enum class StepClass { None, Sq, Two, Meas };

StepClass class_of(const Gate& g) {
    if (g.is_single_qubit()) return StepClass::Sq;
    if (g.is_two_qubit()) return StepClass::Two;
    return StepClass::Meas;
}

// ASAP over all gates; when homogeneous, a step holds one gate class only.
int asap_total(const Circuit& c, bool homogeneous) {
    std::vector<int> busy(static_cast<std::size_t>(c.n_qubits()), 0);
    std::map<int, StepClass> step_class;
    int depth = 0;
    for (const auto& g : c.gates()) {
        int t = 0;
        for (int q : gate_qubits(g)) t = std::max(t, busy[static_cast<std::size_t>(q)]);
        ++t;
        if (homogeneous) {
            StepClass k = class_of(g);
            while (true) {
                auto it = step_class.find(t);
                if (it == step_class.end() || it->second == k) break;
                ++t;
            }
            step_class[t] = k;
        }
        for (int q : gate_qubits(g)) busy[static_cast<std::size_t>(q)] = t;
        depth = std::max(depth, t);
    }
    return depth;
}

}  // namespace

ResourceReport resource_report(const Circuit& c) {
    ResourceReport r;
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::CNOT: ++r.cnot_count; ++r.entangling_count; break;
            case GateKind::CP:
            case GateKind::CZ:
            case GateKind::ISWAP: ++r.entangling_count; break;
            case GateKind::RZ:
            case GateKind::RX:
            case GateKind::H: ++r.sq_count; break;
            case GateKind::MEASURE_X: ++r.measurement_count; break;
            case GateKind::COND_Z: ++r.cond_count; break;
        }
    }
    r.cnot_depth_measured = asap_depth(c, [](const Gate& g) { return g.is_two_qubit(); });
    r.sq_depth_measured = asap_depth(c, [](const Gate& g) { return g.is_single_qubit(); });
    r.meas_depth_measured = asap_depth(c, [](const Gate& g) { return g.is_measurement(); });
    r.total_depth_parallel_sq = asap_total(c, false);
    r.total_depth_serial_sq = asap_total(c, true);
    if (c.convention) {
        r.has_convention = true;
        r.cnot_depth = c.convention->cnot_depth;
        r.sq_depth = c.convention->sq_depth;
        r.meas_depth = c.convention->meas_depth;
        r.total_depth_parallel_conv = r.cnot_depth + r.sq_depth + r.meas_depth;
        r.total_depth_serial_conv =
            r.cnot_depth + c.convention->serial_sq_depth + r.meas_depth;
    } else {
        r.cnot_depth = r.cnot_depth_measured;
        r.sq_depth = r.sq_depth_measured;
        r.meas_depth = r.meas_depth_measured;
        r.total_depth_parallel_conv = r.total_depth_parallel_sq;
        r.total_depth_serial_conv = r.total_depth_serial_sq;
    }
    return r;
}

std::string report_table(const ResourceReport& r) {
    std::ostringstream os;
    os << "  CNOTs              " << r.cnot_count << "\n";
    os << "  entangling         " << r.entangling_count << "\n";
    os << "  SQ gates           " << r.sq_count << "\n";
    os << "  measurements       " << r.measurement_count << "\n";
    os << "  conditional gates  " << r.cond_count << "\n";
    os << "  CNOT depth         " << r.cnot_depth;
    if (r.has_convention) os << "  (measured " << r.cnot_depth_measured << ")";
    os << "\n";
    os << "  SQ depth           " << r.sq_depth;
    if (r.has_convention) os << "  (measured " << r.sq_depth_measured << ")";
    os << "\n";
    os << "  meas depth         " << r.meas_depth << "\n";
    os << "  total depth        " << r.total_depth_parallel_conv << " (parallel SQ), "
       << r.total_depth_serial_conv << " (serial SQ)\n";
    os << "  total measured     " << r.total_depth_parallel_sq << " (parallel SQ), "
       << r.total_depth_serial_sq << " (serial SQ)\n";
    return os.str();
}

std::string report_csv_header() {
    return "name,cnots,entangling,sq,measurements,cond,cnot_depth,sq_depth,meas_depth,"
           "total_parallel,total_serial,cnot_depth_measured,sq_depth_measured,"
           "total_parallel_measured,total_serial_measured";
}

std::string report_csv_row(const std::string& name, const ResourceReport& r) {
    std::ostringstream os;
    os << name << "," << r.cnot_count << "," << r.entangling_count << "," << r.sq_count << ","
       << r.measurement_count << "," << r.cond_count << "," << r.cnot_depth << ","
       << r.sq_depth << "," << r.meas_depth << "," << r.total_depth_parallel_conv << ","
       << r.total_depth_serial_conv << "," << r.cnot_depth_measured << ","
       << r.sq_depth_measured << "," << r.total_depth_parallel_sq << ","
       << r.total_depth_serial_sq;
    return os.str();
}

}  // namespace paritylane
