#include "paritylane/sim.hpp"

#include <cmath>
#include <stdexcept>

namespace paritylane {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) throw std::invalid_argument("bad qubit count");
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t b) {
    StateVector s(n_qubits);
    s.amps_[0] = 0.0;
    s.amps_[b] = 1.0;
    return s;
}

StateVector StateVector::plus(int n_qubits) {
    StateVector s(n_qubits);
    double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    for (auto& v : s.amps_) v = a;
    return s;
}

double StateVector::norm() const {
    double t = 0;
    for (const auto& a : amps_) t += std::norm(a);
    return std::sqrt(t);
}

void StateVector::normalize() {
    double nn = norm();
    if (nn < 1e-300) throw std::runtime_error("cannot normalize zero state");
    for (auto& a : amps_) a /= nn;
}

void StateVector::apply_h(int q) {
    const double inv = 1.0 / std::sqrt(2.0);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        cplx lo = amps_[i], hi = amps_[i | bit];
        amps_[i] = inv * (lo + hi);
        amps_[i | bit] = inv * (lo - hi);
    }
}

void StateVector::apply_rz(int q, double phi) {
    const cplx ep = std::polar(1.0, phi);
    const cplx em = std::polar(1.0, -phi);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        amps_[i] *= (i & bit) ? em : ep;
}

void StateVector::apply_rx(int q, double theta) {
    const double c = std::cos(theta);
    const cplx is{0.0, std::sin(theta)};
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        cplx lo = amps_[i], hi = amps_[i | bit];
        amps_[i] = c * lo + is * hi;
        amps_[i | bit] = is * lo + c * hi;
    }
}

void StateVector::apply_cnot(int c, int t) {
    const std::size_t cb = std::size_t{1} << c, tb = std::size_t{1} << t;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amps_[i], amps_[i | tb]);
    }
}

void StateVector::apply_cp(int a, int b, double theta) {
    const cplx ph = std::polar(1.0, theta);
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & ab) && (i & bb)) amps_[i] *= ph;
}

void StateVector::apply_cz(int a, int b) {
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & ab) && (i & bb)) amps_[i] = -amps_[i];
}

void StateVector::apply_iswap(int a, int b) {
    const std::size_t ab = std::size_t{1} << a, bb = std::size_t{1} << b;
    const cplx im{0.0, 1.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & ab) && !(i & bb)) {
            std::size_t j = (i ^ ab) | bb;
            cplx x = amps_[i], y = amps_[j];
            amps_[i] = im * y;
            amps_[j] = im * x;
        }
    }
}

void StateVector::apply_z(int q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & bit) amps_[i] = -amps_[i];
}

double StateVector::project_x(int q, int outcome) {
    // (I + (-1)^outcome X)/2
    const std::size_t bit = std::size_t{1} << q;
    const double sign = outcome ? -1.0 : 1.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        cplx lo = amps_[i], hi = amps_[i | bit];
        amps_[i] = 0.5 * (lo + sign * hi);
        amps_[i | bit] = 0.5 * (sign * lo + hi);
    }
    double p = 0;
    for (const auto& a : amps_) p += std::norm(a);
    if (p > 1e-24) {
        double inv = 1.0 / std::sqrt(p);
        for (auto& a : amps_) a *= inv;
    }
    return p;
}

void StateVector::apply(const Gate& g, const std::vector<int>&) {
    switch (g.kind) {
        case GateKind::CNOT: apply_cnot(g.q0, g.q1); return;
        case GateKind::RZ: apply_rz(g.q0, g.angle); return;
        case GateKind::RX: apply_rx(g.q0, g.angle); return;
        case GateKind::H: apply_h(g.q0); return;
        case GateKind::CP: apply_cp(g.q0, g.q1, g.angle); return;
        case GateKind::CZ: apply_cz(g.q0, g.q1); return;
        case GateKind::ISWAP: apply_iswap(g.q0, g.q1); return;
        default: throw std::invalid_argument("measurement gates need run()");
    }
}

std::vector<Branch> run(const Circuit& c, const StateVector& initial, const RunOptions& opts) {
    if (c.n_qubits() > 14) throw std::invalid_argument("run() supports up to 14 qubits");
    std::size_t n_meas = 0;
    for (const auto& g : c.gates())
        if (g.kind == GateKind::MEASURE_X) ++n_meas;
    if (opts.policy == OutcomePolicy::EnumerateAll && n_meas > 16)
        throw std::invalid_argument("too many measurements to enumerate");
    if (opts.policy == OutcomePolicy::Fixed && opts.fixed_bits.size() != n_meas)
        throw std::invalid_argument("fixed outcome count mismatch");

    struct Work {
        StateVector state;
        std::vector<int> outcomes;
        double prob;
        std::vector<int> cbits;
    };
    std::mt19937_64 rng(opts.seed);
    std::vector<Work> frontier;
    frontier.push_back({initial, {}, 1.0, std::vector<int>(static_cast<std::size_t>(
                                              std::max(1, c.n_cbits())), 0)});
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::MEASURE_X) {
            std::vector<Work> next;
            for (auto& w : frontier) {
                if (opts.policy == OutcomePolicy::EnumerateAll) {
                    for (int bit = 0; bit < 2; ++bit) {
                        Work b = w;
                        double p = b.state.project_x(g.q0, bit);
                        if (p < 1e-18) continue;
                        b.prob *= p;
                        b.outcomes.push_back(bit);
                        b.cbits[static_cast<std::size_t>(g.cbit)] = bit;
                        next.push_back(std::move(b));
                    }
                } else {
                    int bit;
                    if (opts.policy == OutcomePolicy::Fixed) {
                        bit = opts.fixed_bits[w.outcomes.size()];
                    } else {
                        // choose by probability
                        StateVector probe = w.state;
                        double p0 = probe.project_x(g.q0, 0);
                        std::uniform_real_distribution<double> u(0.0, 1.0);
                        bit = (u(rng) < p0) ? 0 : 1;
                    }
                    double p = w.state.project_x(g.q0, bit);
                    if (p < 1e-18) throw std::runtime_error("zero-probability fixed branch");
                    Work b = std::move(w);
                    b.prob *= p;
                    b.outcomes.push_back(bit);
                    b.cbits[static_cast<std::size_t>(g.cbit)] = bit;
                    next.push_back(std::move(b));
                }
            }
            frontier = std::move(next);
        } else if (g.kind == GateKind::COND_Z) {
            for (auto& w : frontier)
                if (w.cbits[static_cast<std::size_t>(g.cbit)]) w.state.apply_z(g.q0);
        } else {
            for (auto& w : frontier) w.state.apply(g);
        }
    }
    std::vector<Branch> out;
    out.reserve(frontier.size());
    for (auto& w : frontier) out.push_back({std::move(w.outcomes), std::move(w.state), w.prob});
    return out;
}

StateVector run_pure(const Circuit& c, const StateVector& initial) {
    if (c.has_measurement()) throw std::invalid_argument("run_pure needs a measurement-free circuit");
    StateVector s = initial;
    for (const auto& g : c.gates()) s.apply(g);
    return s;
}

std::vector<std::vector<cplx>> unitary_of(const Circuit& c) {
    if (c.has_measurement()) throw std::invalid_argument("unitary_of needs a measurement-free circuit");
    if (c.n_qubits() > 10) throw std::invalid_argument("unitary_of supports up to 10 qubits");
    const std::size_t dim = std::size_t{1} << c.n_qubits();
    std::vector<std::vector<cplx>> u(dim, std::vector<cplx>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
        StateVector col = run_pure(c, StateVector::basis(c.n_qubits(), b));
        for (std::size_t i = 0; i < dim; ++i) u[i][b] = col[i];
    }
    return u;
}

PhaseEquiv equiv_global_phase(const std::vector<cplx>& a, const std::vector<cplx>& b,
                              double tol) {
    if (a.size() != b.size()) return {false, 0.0, 1e300};
    std::size_t imax = 0;
    double best = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b[i]) > best) { best = std::abs(b[i]); imax = i; }
    }
    if (best < 1e-14) return {false, 0.0, 1e300};
    cplx phase = a[imax] / b[imax];
    if (std::abs(std::abs(phase) - 1.0) > tol) return {false, phase, 1e300};
    phase /= std::abs(phase);
    double dev = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dev = std::max(dev, std::abs(a[i] - phase * b[i]));
    return {dev < tol, phase, dev};
}

PhaseEquiv equiv_global_phase(const StateVector& a, const StateVector& b, double tol) {
    return equiv_global_phase(a.amps(), b.amps(), tol);
}

PhaseEquiv equiv_global_phase(const std::vector<std::vector<cplx>>& a,
                              const std::vector<std::vector<cplx>>& b, double tol) {
    std::vector<cplx> fa, fb;
    for (const auto& row : a) fa.insert(fa.end(), row.begin(), row.end());
    for (const auto& row : b) fb.insert(fb.end(), row.begin(), row.end());
    return equiv_global_phase(fa, fb, tol);
}

}  // namespace paritylane
