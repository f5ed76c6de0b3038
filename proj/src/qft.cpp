#include "paritylane/qft.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace paritylane {

Circuit reference_qft(unsigned n) {
    if (n < 1) throw std::invalid_argument("reference_qft needs n >= 1");
    Circuit c(static_cast<int>(n));
    for (unsigned i = 0; i < n; ++i) {
        c.append(Gate::h(static_cast<int>(i)));
        for (unsigned j = i + 1; j < n; ++j) {
            double theta = M_PI / static_cast<double>(1u << (j - i));
            c.append(Gate::cp(static_cast<int>(i), static_cast<int>(j), theta));
        }
    }
    return c;
}

namespace {

constexpr double kZeroTol = 1e-14;

double normalize_angle(double a) {
    a = std::remainder(a, 2 * M_PI);     // (-pi, pi]
    if (a <= -M_PI) a += 2 * M_PI;
    return a;
}

// CP(theta) = e^{i theta/4} RZ(-theta/4)_j RZ(-theta/4)_k RZ(theta/4)_{jk}
// with RZ(phi) = exp(i phi Z); the Hadamard splits as
// H = i RZ(-pi/4) RX(-pi/4) RZ(-pi/4).
double cp_theta(unsigned gap) { return M_PI / static_cast<double>(1u << gap); }

}  // namespace

QftPlan synth_qft_plan(unsigned n) {
    if (n < 2) throw std::invalid_argument("synth_qft needs n >= 2");
    if (n > 64) throw std::invalid_argument("n exceeds label capacity");
    Circuit c(static_cast<int>(n));

    // opening layer: direct H for logical 0; merged pre-rotations elsewhere
    // (base shares of CP_{kj} for k<j, plus the H opening share on middle
    // logical qubits)
    c.append(Gate::h(0));
    for (unsigned j = 1; j < n; ++j) {
        double a = 0.0;
        if (j <= n - 2) a += -M_PI / 4;
        for (unsigned k = 0; k < j; ++k) a += -cp_theta(j - k) / 4;
        a = normalize_angle(a);
        if (std::abs(a) > kZeroTol) c.append(Gate::rz(static_cast<int>(j), a));
    }

    // the walk: staircase entry + pair-op sweeps, rotations fired greedily
    std::vector<LabelSet> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back(LabelSet::single(i));
    std::set<LabelSet> rotated;
    std::vector<bool> hx(n, false);
    hx[0] = true;

    auto fire_events = [&]() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (unsigned i = 1; i + 1 < n; ++i) {
                if (hx[i]) continue;
                bool ready = true;
                for (unsigned k = 0; k < i && ready; ++k)
                    if (!rotated.count(LabelSet::pair(k, i))) ready = false;
                if (!ready) continue;
                int where = -1, cnt = 0;
                for (unsigned q = 0; q < n; ++q) {
                    if (labels[q].contains(i)) { where = static_cast<int>(q); ++cnt; }
                }
                if (cnt == 1) {
                    hx[i] = true;
                    c.append(Gate::rx(where, -M_PI / 4));
                    changed = true;
                }
            }
            for (unsigned q = 0; q < n; ++q) {
                const LabelSet& l = labels[q];
                if (l.weight() != 2 || rotated.count(l)) continue;
                unsigned i = l.min_index(), j = l.max_index();
                if (hx[i] && !hx[j]) {
                    rotated.insert(l);
                    double a = normalize_angle(cp_theta(j - i) / 4);
                    if (std::abs(a) > kZeroTol) c.append(Gate::rz(static_cast<int>(q), a));
                    changed = true;
                }
            }
        }
    };

    CnotList walk;
    for (unsigned k = 1; k < n; ++k) walk.emplace_back(k, k - 1);
    for (unsigned s = n - 1; s >= 1; --s) {
        for (unsigned e = 0; e < s; ++e) {
            walk.emplace_back(e, e + 1);
            walk.emplace_back(e + 1, e);
        }
    }
    fire_events();
    for (const auto& [ctl, tgt] : walk) {
        labels[tgt] ^= labels[ctl];
        c.append(Gate::cnot(static_cast<int>(ctl), static_cast<int>(tgt)));
        fire_events();
    }

    // closing layer: merged post-rotations on the reversed singles, direct H
    // for logical n-1 (now sitting on chain qubit 0)
    for (unsigned i = 0; i + 1 < n; ++i) {
        double a = 0.0;
        if (i >= 1) a += -M_PI / 4;
        for (unsigned j = i + 1; j < n; ++j) a += -cp_theta(j - i) / 4;
        a = normalize_angle(a);
        if (std::abs(a) > kZeroTol) c.append(Gate::rz(static_cast<int>(n - 1 - i), a));
    }
    c.append(Gate::h(0));

    c.convention = DepthConvention{
        static_cast<int>(4 * n - 4),   // 2n-2 depth-2 rounds of the walk
        static_cast<int>(n + 1),       // opening + per-sweep + closing SQ batches
        0,
        static_cast<int>(2 * n - 1),   // serialized SQ batches
    };
    QftPlan plan{std::move(c), std::move(labels)};
    return plan;
}

Circuit synth_qft(unsigned n) {
    return synth_qft_plan(n).circuit;
}

Circuit merge_rotations(const Circuit& c) {
    Circuit out(c.n_qubits(), c.n_cbits());
    std::vector<std::pair<int, double>> pending;  // (qubit, accumulated RZ)
    auto flush_qubit = [&](int q) {
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            if (it->first == q) {
                double a = normalize_angle(it->second);
                if (std::abs(a) > kZeroTol) out.append(Gate::rz(q, a));
                pending.erase(it);
                return;
            }
        }
    };
    auto flush_all = [&]() {
        for (auto& [q, a0] : pending) {
            double a = normalize_angle(a0);
            if (std::abs(a) > kZeroTol) out.append(Gate::rz(q, a));
        }
        pending.clear();
    };
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::RZ) {
            bool merged = false;
            for (auto& [q, a] : pending) {
                if (q == g.q0) { a += g.angle; merged = true; break; }
            }
            if (!merged) pending.emplace_back(g.q0, g.angle);
            continue;
        }
        // structural gate: flush touched qubits
        flush_qubit(g.q0);
        if (g.is_two_qubit()) flush_qubit(g.q1);
        out.append(g);
    }
    flush_all();
    return out;
}

}  // namespace paritylane
