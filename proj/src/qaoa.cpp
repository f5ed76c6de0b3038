#include "paritylane/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "paritylane/gf2.hpp"

namespace paritylane {

IsingProblem IsingProblem::make(unsigned n) {
    IsingProblem p;
    p.n = n;
    p.field.assign(n, 0.0);
    return p;
}

void IsingProblem::set_coupling(unsigned j, unsigned k, double v) {
    if (j == k) throw std::invalid_argument("no diagonal couplings");
    if (j > k) std::swap(j, k);
    if (k >= n) throw std::out_of_range("coupling index out of range");
    coupling[{j, k}] = v;
}

double IsingProblem::coupling_at(unsigned j, unsigned k) const {
    if (j > k) std::swap(j, k);
    auto it = coupling.find({j, k});
    return it == coupling.end() ? 0.0 : it->second;
}

void IsingProblem::validate() const {
    if (n < 1) throw std::invalid_argument("problem needs n >= 1");
    if (field.size() != n) throw std::invalid_argument("field size mismatch");
    for (double h : field)
        if (!std::isfinite(h)) throw std::invalid_argument("non-finite field");
    for (const auto& [jk, v] : coupling) {
        if (jk.first >= jk.second || jk.second >= n)
            throw std::invalid_argument("bad coupling key");
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite coupling");
    }
}

void QaoaParams::validate() const {
    if (betas.size() != gammas.size() || betas.empty())
        throw std::invalid_argument("betas/gammas must have equal nonzero length");
    for (double b : betas)
        if (!std::isfinite(b)) throw std::invalid_argument("non-finite beta");
    for (double g : gammas)
        if (!std::isfinite(g)) throw std::invalid_argument("non-finite gamma");
}

namespace {

// Rotation for one Ising term hosted on a chain qubit carrying its label.
void rotate_term(Circuit& c, const IsingProblem& p, double gamma, unsigned qubit,
                 LabelSet label, std::set<LabelSet>& seen) {
    if (label.empty() || label.weight() > 2 || seen.count(label)) return;
    seen.insert(label);
    double v;
    if (label.weight() == 1) {
        v = p.field[label.min_index()];
    } else {
        v = p.coupling_at(label.min_index(), label.max_index());
    }
    if (v != 0.0) c.append(Gate::rz(static_cast<int>(qubit), gamma * v));
}

}  // namespace

UpResult synth_up_linear(const IsingProblem& problem, double gamma, std::size_t round_offset) {
    problem.validate();
    const unsigned n = problem.n;
    if (n < 2) throw std::invalid_argument("linear walk needs n >= 2");
    ProgressionSchedule sched = progression_schedule_from(n, round_offset, n - 1);

    Circuit c(static_cast<int>(n));
    std::set<LabelSet> seen;
    for (unsigned q = 0; q < n; ++q)
        rotate_term(c, problem, gamma, q, sched.start.labels[q], seen);

    // Emission per round: up-layer, down-layer, then the rotations for labels
    // freshly created this round *except* the down-layer targets involved in
    // a cross-round back-to-back pair; those are deferred one round so the
    // pair stays adjacent for the iSWAP rewrite.  Fresh labels survive the
    // following round untouched (its targets sit on the other parity class).
    std::vector<std::pair<unsigned, LabelSet>> deferred;
    for (std::size_t r = 0; r < sched.rounds.size(); ++r) {
        const auto& round = sched.rounds[r];
        for (const auto& [ctl, tgt] : round.layer1)
            c.append(Gate::cnot(static_cast<int>(ctl), static_cast<int>(tgt)));
        // previous round's deferred rotations are now pair-safe
        for (const auto& [q, l] : deferred)
            rotate_term(c, problem, gamma, q, l, seen);
        deferred.clear();
        for (const auto& [ctl, tgt] : round.layer2)
            c.append(Gate::cnot(static_cast<int>(ctl), static_cast<int>(tgt)));
        std::set<unsigned> down_targets;
        for (const auto& [ctl, tgt] : round.layer2) down_targets.insert(tgt);
        for (unsigned q = 0; q < n; ++q) {
            LabelSet l = round.line_after.labels[q];
            if (seen.count(l)) continue;
            if (down_targets.count(q)) deferred.emplace_back(q, l);
            else rotate_term(c, problem, gamma, q, l, seen);
        }
    }
    for (const auto& [q, l] : deferred) rotate_term(c, problem, gamma, q, l, seen);

    UpResult res{std::move(c), sched.rounds.back().line_after, sched.rounds.size()};
    return res;
}

namespace {

struct UxPlan {
    std::vector<unsigned> rx_qubit;               // per logical
    CnotList conj;                                // (control = rx host, other)
};

UxPlan ux_plan(const SpanningLine& line) {
    const unsigned n = line.size();
    std::vector<std::vector<unsigned>> linesets(n);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned q = 0; q < n; ++q)
            if (line.labels[q].contains(j)) linesets[j].push_back(q);
        if (linesets[j].empty() || linesets[j].size() > 2)
            throw std::runtime_error("logical line length out of range (schedule bug)");
        if (linesets[j].size() == 2 &&
            (linesets[j][1] != linesets[j][0] + 1))
            throw std::runtime_error("logical line not contiguous (schedule bug)");
    }
    // place forced singles first, then pick a free endpoint per 2-line
    std::vector<unsigned> order(n);
    for (unsigned j = 0; j < n; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
        if (linesets[a].size() != linesets[b].size())
            return linesets[a].size() < linesets[b].size();
        return a < b;
    });
    std::vector<int> host_of(n, -1);  // qubit -> logical
    UxPlan plan;
    plan.rx_qubit.assign(n, 0);
    for (unsigned j : order) {
        int placed = -1;
        for (unsigned q : linesets[j]) {
            if (host_of[q] < 0) { placed = static_cast<int>(q); break; }
        }
        if (placed < 0) throw std::runtime_error("mixer RX assignment failed");
        host_of[static_cast<unsigned>(placed)] = static_cast<int>(j);
        plan.rx_qubit[j] = static_cast<unsigned>(placed);
    }
    for (unsigned j = 0; j < n; ++j) {
        if (linesets[j].size() == 2) {
            unsigned host = plan.rx_qubit[j];
            unsigned other = linesets[j][0] == host ? linesets[j][1] : linesets[j][0];
            plan.conj.emplace_back(host, other);
        }
    }
    // topological order: gate A before gate B whenever target(A) == control(B),
    // so the pulled X strings localize exactly
    CnotList ordered;
    CnotList remaining = plan.conj;
    while (!remaining.empty()) {
        bool progress = false;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            unsigned ctl = remaining[i].first;
            bool blocked = false;
            for (std::size_t k = 0; k < remaining.size(); ++k) {
                if (k != i && remaining[k].second == ctl) { blocked = true; break; }
            }
            if (!blocked) {
                ordered.push_back(remaining[i]);
                remaining.erase(remaining.begin() + static_cast<long>(i));
                progress = true;
                break;
            }
        }
        if (!progress) throw std::runtime_error("cycle in mixer conjugation order");
    }
    plan.conj = std::move(ordered);
    return plan;
}

}  // namespace

Circuit synth_ux_linear(const SpanningLine& line, double beta) {
    const unsigned n = line.size();
    UxPlan plan = ux_plan(line);
    Circuit c(static_cast<int>(n));
    for (const auto& [host, other] : plan.conj)
        c.append(Gate::cnot(static_cast<int>(host), static_cast<int>(other)));
    for (unsigned j = 0; j < n; ++j)
        c.append(Gate::rx(static_cast<int>(plan.rx_qubit[j]), beta));
    for (auto it = plan.conj.rbegin(); it != plan.conj.rend(); ++it)
        c.append(Gate::cnot(static_cast<int>(it->first), static_cast<int>(it->second)));
    return c;
}

Circuit ladder_copy(unsigned n) {
    Circuit c(static_cast<int>(2 * n));
    for (unsigned k = 0; k < n; ++k)
        c.append(Gate::cnot(static_cast<int>(k), static_cast<int>(n + k)));
    return c;
}

LadderDecode ladder_decode(const TrackerState& state) {
    const unsigned n = state.n_logical();
    if (state.n_physical() != 2 * n)
        throw std::invalid_argument("ladder decode expects 2n physical qubits");
    std::vector<std::uint64_t> keep, meas;
    for (unsigned q = 0; q < n; ++q) keep.push_back(state.labels()[q].mask());
    for (unsigned q = n; q < 2 * n; ++q) meas.push_back(state.labels()[q].mask());
    if (gf2::rank(keep) != static_cast<int>(n))
        throw std::invalid_argument("kept rail is rank deficient");
    auto sups = gf2::express(keep, meas, n);
    if (!sups) throw std::invalid_argument("measured labels not expressible over kept rail");
    LadderDecode out{Circuit(static_cast<int>(2 * n), static_cast<int>(n)), *sups};
    for (unsigned k = 0; k < n; ++k)
        out.fragment.append(Gate::measure_x(static_cast<int>(n + k), static_cast<int>(k)));
    for (unsigned k = 0; k < n; ++k) {
        for (unsigned q = 0; q < n; ++q) {
            if ((*sups)[k] >> q & 1)
                out.fragment.append(Gate::cond_z(static_cast<int>(q), static_cast<int>(k)));
        }
    }
    return out;
}

namespace {

struct LadderRound {
    // rail walk layers in execution order; qubits are rail-local
    std::vector<CnotList> rail1_layers;
    std::vector<CnotList> rail2_layers;
    std::vector<SpanningLine> rail1_lines;  // after each rail1 round (2 layers)
    std::vector<SpanningLine> rail2_lines;
    SpanningLine rail1_final;
};

// Split walk: rail1 continues k1 = ceil((n-1)/2) rounds forward from the
// current offset; rail2 (a copy of rail1's start line) replays the k2
// previous rounds, visiting the backward lines.
LadderRound ladder_round_plan(unsigned n, std::size_t offset) {
    const std::size_t k1 = (n - 1 + 1) / 2;
    const std::size_t k2 = (n - 1) / 2;
    if (offset < k2) throw std::logic_error("ladder offset below backward span");
    LadderRound lr;
    ProgressionSchedule fwd = progression_schedule_from(n, offset, k1);
    for (const auto& r : fwd.rounds) {
        lr.rail1_layers.push_back(r.layer1);
        lr.rail1_layers.push_back(r.layer2);
        lr.rail1_lines.push_back(r.line_after);
    }
    lr.rail1_final = fwd.rounds.back().line_after;
    if (k2 > 0) {
        ProgressionSchedule bwd = progression_schedule_from(n, offset - k2, k2);
        // replay rounds offset-1 .. offset-k2; each round is an involution
        for (std::size_t i = bwd.rounds.size(); i-- > 0;) {
            const auto& r = bwd.rounds[i];
            // reverse internal order for an exact retrace of intermediate states
            lr.rail2_layers.push_back(r.layer2);
            lr.rail2_layers.push_back(r.layer1);
            // after replaying round i, rail2 sits at that round's *start* line
            lr.rail2_lines.push_back(i > 0 ? bwd.rounds[i - 1].line_after : bwd.start);
        }
    }
    return lr;
}

}  // namespace

QaoaCircuit synth_qaoa(const IsingProblem& problem, const QaoaParams& params,
                       QaoaTopology topology) {
    problem.validate();
    params.validate();
    const unsigned n = problem.n;
    if (n < 2) throw std::invalid_argument("synth_qaoa needs n >= 2");
    const unsigned p = params.p();

    if (topology == QaoaTopology::Linear) {
        Circuit c(static_cast<int>(n));
        for (unsigned q = 0; q < n; ++q) c.append(Gate::h(static_cast<int>(q)));
        std::size_t offset = 0;
        SpanningLine line;
        for (unsigned round = 0; round < p; ++round) {
            UpResult up = synth_up_linear(problem, params.gammas[round], offset);
            c.append(up.circuit);
            offset += up.rounds_consumed;
            line = up.final_line;
            c.append(synth_ux_linear(line, params.betas[round]));
        }
        int pi = static_cast<int>(p);
        int ni = static_cast<int>(n);
        c.convention = DepthConvention{
            pi * (2 * ni + 2),
            1 + pi * ((ni + 1 + 1) / 2 + 2),
            0,
            1 + pi * (ni - 1 + 2),
        };
        TrackerState tracker = TrackerState::from_labels(n, line.labels);
        QaoaCircuit out{std::move(c), line.labels, std::move(tracker)};
        return out;
    }

    // ladder
    if (n > 32) throw std::invalid_argument("ladder supports up to 32 logical qubits");
    Circuit c(static_cast<int>(2 * n), static_cast<int>(p * n));
    const std::size_t k2 = (n - 1) / 2;
    std::size_t offset = k2;
    // initial frame: rail1 holds the walk line at `offset`, rail2 empty
    ProgressionSchedule seed = progression_schedule_from(n, offset, 1);
    SpanningLine rail1_line = seed.start;
    for (unsigned q = 0; q < n; ++q) c.append(Gate::h(static_cast<int>(q)));
    int cbit = 0;
    for (unsigned round = 0; round < p; ++round) {
        const double gamma = params.gammas[round];
        std::set<LabelSet> seen;
        for (unsigned q = 0; q < n; ++q)
            rotate_term(c, problem, gamma, q, rail1_line.labels[q], seen);
        // reset rail2 to |0> after earlier measurements, then copy
        if (round > 0) {
            for (unsigned k = 0; k < n; ++k) {
                int prev_cbit = static_cast<int>((round - 1) * n + k);
                c.append(Gate::cond_z(static_cast<int>(n + k), prev_cbit));
                c.append(Gate::h(static_cast<int>(n + k)));
            }
        }
        c.append(ladder_copy(n));
        SpanningLine rail2_line = rail1_line;
        LadderRound lr = ladder_round_plan(n, offset);
        std::size_t r1_round = 0, r2_round = 0;
        std::size_t t1 = 0, t2 = 0;
        while (t1 < lr.rail1_layers.size() || t2 < lr.rail2_layers.size()) {
            if (t1 < lr.rail1_layers.size()) {
                for (const auto& [ctl, tgt] : lr.rail1_layers[t1])
                    c.append(Gate::cnot(static_cast<int>(ctl), static_cast<int>(tgt)));
                ++t1;
                if (t1 % 2 == 0) {
                    rail1_line = lr.rail1_lines[r1_round++];
                    for (unsigned q = 0; q < n; ++q)
                        rotate_term(c, problem, gamma, q, rail1_line.labels[q], seen);
                }
            }
            if (t2 < lr.rail2_layers.size()) {
                for (const auto& [ctl, tgt] : lr.rail2_layers[t2])
                    c.append(Gate::cnot(static_cast<int>(n + ctl), static_cast<int>(n + tgt)));
                ++t2;
                if (t2 % 2 == 0) {
                    rail2_line = lr.rail2_lines[r2_round++];
                    for (unsigned q = 0; q < n; ++q)
                        rotate_term(c, problem, gamma, n + q, rail2_line.labels[q], seen);
                }
            }
        }
        rail1_line = lr.rail1_final;
        offset += (n - 1 + 1) / 2;
        // decode: measure rail 2, conditional Z on rail 1
        std::vector<LabelSet> all_labels = rail1_line.labels;
        all_labels.insert(all_labels.end(), rail2_line.labels.begin(), rail2_line.labels.end());
        TrackerState at_measure = TrackerState::from_labels(n, all_labels);
        LadderDecode dec = ladder_decode(at_measure);
        for (unsigned k = 0; k < n; ++k)
            c.append(Gate::measure_x(static_cast<int>(n + k), cbit + static_cast<int>(k)));
        for (unsigned k = 0; k < n; ++k)
            for (unsigned q = 0; q < n; ++q)
                if (dec.supports[k] >> q & 1)
                    c.append(Gate::cond_z(static_cast<int>(q), cbit + static_cast<int>(k)));
        cbit += static_cast<int>(n);
        // mixer on rail 1
        Circuit ux = synth_ux_linear(rail1_line, params.betas[round]);
        for (const auto& g : ux.gates()) c.append(g);
    }
    int ni = static_cast<int>(n);
    int pi = static_cast<int>(p);
    c.convention = DepthConvention{
        pi * (2 * ((ni + 1) / 2) + 4),
        1 + pi * ((ni + 3) / 4 + 3),
        pi,
        1 + pi * (ni - 1 + 2),
    };
    std::vector<LabelSet> final_labels = rail1_line.labels;
    std::vector<LabelSet> tracker_labels = final_labels;
    for (unsigned q = 0; q < n; ++q) tracker_labels.push_back(LabelSet{});
    TrackerState tracker = TrackerState::from_labels(n, tracker_labels);
    QaoaCircuit out{std::move(c), std::move(final_labels), std::move(tracker)};
    return out;
}

StateVector reference_state(const IsingProblem& problem, const QaoaParams& params) {
    problem.validate();
    params.validate();
    const unsigned n = problem.n;
    if (n > 12) throw std::invalid_argument("reference_state supports up to 12 qubits");
    StateVector s = StateVector::plus(static_cast<int>(n));
    const std::size_t dim = s.dim();
    std::vector<double> diag(dim, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
        double e = 0;
        for (const auto& [jk, v] : problem.coupling) {
            int zj = (b >> jk.first & 1) ? -1 : 1;
            int zk = (b >> jk.second & 1) ? -1 : 1;
            e += v * zj * zk;
        }
        for (unsigned j = 0; j < n; ++j)
            e += problem.field[j] * ((b >> j & 1) ? -1 : 1);
        diag[b] = e;
    }
    for (unsigned round = 0; round < params.p(); ++round) {
        const double gamma = params.gammas[round];
        for (std::size_t b = 0; b < dim; ++b)
            s[b] *= std::polar(1.0, gamma * diag[b]);
        // exp(i beta sum_j X_j) factorizes into commuting single-qubit RX
        for (unsigned j = 0; j < n; ++j) s.apply_rx(static_cast<int>(j), params.betas[round]);
    }
    return s;
}

double energy(const IsingProblem& problem, const StateVector& state) {
    problem.validate();
    if (state.dim() != (std::size_t{1} << problem.n))
        throw std::invalid_argument("dimension mismatch");
    double e = 0;
    for (std::size_t b = 0; b < state.dim(); ++b) {
        double w = std::norm(state[b]);
        if (w == 0) continue;
        double eb = 0;
        for (const auto& [jk, v] : problem.coupling) {
            int zj = (b >> jk.first & 1) ? -1 : 1;
            int zk = (b >> jk.second & 1) ? -1 : 1;
            eb += v * zj * zk;
        }
        for (unsigned j = 0; j < problem.n; ++j)
            eb += problem.field[j] * ((b >> j & 1) ? -1 : 1);
        e += w * eb;
    }
    return e;
}

Circuit decode_network(const std::vector<LabelSet>& labels) {
    const unsigned n = static_cast<unsigned>(labels.size());
    std::vector<std::uint64_t> rows;
    rows.reserve(n);
    for (const auto& l : labels) rows.push_back(l.mask());
    auto ops = gf2::reduction_ops(rows, n);
    Circuit c(static_cast<int>(n));
    for (const auto& [ctl, tgt] : ops)
        c.append(Gate::cnot(static_cast<int>(ctl), static_cast<int>(tgt)));
    return c;
}

StateVector frame_decode(const StateVector& s, const std::vector<LabelSet>& labels) {
    Circuit dec = decode_network(labels);
    return run_pure(dec, s);
}

}  // namespace paritylane
