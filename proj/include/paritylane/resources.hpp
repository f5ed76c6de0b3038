#pragma once

#include <string>

#include "paritylane/circuit.hpp"

namespace paritylane {

// Gate counts plus two families of depth figures.
//
// Measured depths come from as-soon-as-possible scheduling with one gate per
// qubit per step: cnot_depth_measured schedules only the entangling gates,
// sq_depth_measured only the single-qubit gates (which reduces to the largest
// per-qubit gate count), meas_depth_measured only measurements/feedforward.
// total_depth_parallel_sq is the ASAP depth of the whole gate list and
// total_depth_serial_sq forbids single-qubit gates from sharing a step with
// other gate classes.
//
// Convention depths reproduce the round accounting the synthesis constructions
// use (a commuting CNOT round is depth 2 irrespective of occupancy; totals add
// per class).  For circuits without a declared convention they fall back to
// the measured values.
struct ResourceReport {
    // counts
    long cnot_count = 0;
    long sq_count = 0;
    long entangling_count = 0;
    long measurement_count = 0;
    long cond_count = 0;

    // measured (ASAP)
    int cnot_depth_measured = 0;
    int sq_depth_measured = 0;
    int meas_depth_measured = 0;
    int total_depth_parallel_sq = 0;
    int total_depth_serial_sq = 0;

    // convention (declared by synthesis; highlighted by report tables)
    int cnot_depth = 0;
    int sq_depth = 0;
    int meas_depth = 0;
    int total_depth_parallel_conv = 0;
    int total_depth_serial_conv = 0;
    bool has_convention = false;
};

ResourceReport resource_report(const Circuit& c);

std::string report_table(const ResourceReport& r);
std::string report_csv_header();
std::string report_csv_row(const std::string& name, const ResourceReport& r);

}  // namespace paritylane
