#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "paritylane/circuit.hpp"

namespace paritylane {

using cplx = std::complex<double>;

// Dense statevector, qubit 0 = least significant bit of the basis index.
class StateVector {
  public:
    explicit StateVector(int n_qubits);  // |0...0>
    static StateVector basis(int n_qubits, std::uint64_t b);
    static StateVector plus(int n_qubits);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<cplx>& amps() const { return amps_; }

    double norm() const;
    void normalize();

    void apply(const Gate& g, const std::vector<int>& cbits_ignored = {});
    void apply_h(int q);
    void apply_rz(int q, double phi);     // exp(i phi Z)
    void apply_rx(int q, double theta);   // exp(i theta X)
    void apply_cnot(int c, int t);
    void apply_cp(int a, int b, double theta);
    void apply_cz(int a, int b);
    void apply_iswap(int a, int b);
    void apply_z(int q);

    // Projects onto the X eigenstate (I + (-1)^outcome X)/2 of qubit q.
    // Returns the branch probability; the state is left unnormalized when
    // the probability is ~0, normalized otherwise.
    double project_x(int q, int outcome);

  private:
    int n_;
    std::vector<cplx> amps_;
};

enum class OutcomePolicy { Fixed, EnumerateAll, Random };

struct RunOptions {
    OutcomePolicy policy = OutcomePolicy::EnumerateAll;
    std::vector<int> fixed_bits;   // Fixed policy: outcome per measurement in order
    std::uint64_t seed = 0;        // Random policy
};

struct Branch {
    std::vector<int> outcomes;  // per MEASURE_X in circuit order
    StateVector state;
    double probability;
};

// Executes the circuit on the initial state.  MEASURE_X projects per the
// policy; COND_Z applies Z when its cbit is 1.  Under EnumerateAll the
// branch probabilities sum to 1; zero-probability branches are dropped.
std::vector<Branch> run(const Circuit& c, const StateVector& initial, const RunOptions& opts = {});

// Convenience for measurement-free circuits.
StateVector run_pure(const Circuit& c, const StateVector& initial);

// Full unitary by columns; measurement-free circuits, n <= 10.
std::vector<std::vector<cplx>> unitary_of(const Circuit& c);

struct PhaseEquiv {
    bool equal;
    cplx phase;       // a == phase * b
    double max_dev;
};

PhaseEquiv equiv_global_phase(const std::vector<cplx>& a, const std::vector<cplx>& b,
                              double tol);
PhaseEquiv equiv_global_phase(const StateVector& a, const StateVector& b, double tol);
PhaseEquiv equiv_global_phase(const std::vector<std::vector<cplx>>& a,
                              const std::vector<std::vector<cplx>>& b, double tol);

}  // namespace paritylane
