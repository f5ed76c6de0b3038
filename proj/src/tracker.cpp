#include "paritylane/tracker.hpp"

#include <stdexcept>

#include "paritylane/gf2.hpp"

namespace paritylane {

TrackerState TrackerState::identity(unsigned n) {
    TrackerState s;
    s.n_logical_ = n;
    for (unsigned i = 0; i < n; ++i) s.labels_.push_back(LabelSet::single(i));
    return s;
}

TrackerState TrackerState::with_empty(unsigned n_logical, unsigned n_empty) {
    TrackerState s = identity(n_logical);
    for (unsigned i = 0; i < n_empty; ++i) {
        unsigned q = n_logical + i;
        s.labels_.push_back(LabelSet{});
        s.stab_seeds_.push_back(q);
        s.stab_supports_.push_back(std::uint64_t{1} << q);
    }
    return s;
}

TrackerState TrackerState::from_labels(unsigned n_logical, std::vector<LabelSet> labels) {
    TrackerState s;
    s.n_logical_ = n_logical;
    s.labels_ = std::move(labels);
    if (s.labels_.size() > 64) throw std::invalid_argument("at most 64 physical qubits");
    for (unsigned q = 0; q < s.labels_.size(); ++q) {
        if (s.labels_[q].empty()) {
            s.stab_seeds_.push_back(q);
            s.stab_supports_.push_back(std::uint64_t{1} << q);
        }
    }
    if (static_cast<unsigned>(s.rank()) != n_logical)
        throw std::invalid_argument("initial labels must have full logical rank");
    return s;
}

void TrackerState::apply_cnot(unsigned control, unsigned target) {
    if (control == target) throw std::invalid_argument("CNOT needs distinct qubits");
    if (control >= labels_.size() || target >= labels_.size())
        throw std::out_of_range("CNOT qubit out of range");
    labels_[target] ^= labels_[control];
    // Z stabilizers propagate forward: conjugating Z_t by CNOT(c->t) yields
    // Z_c Z_t, so a support containing the target gains/toggles the control.
    for (auto& sup : stab_supports_) {
        if (sup >> target & 1) sup ^= std::uint64_t{1} << control;
    }
}

LabelSet TrackerState::logical_z_support(unsigned physical_qubit) const {
    if (physical_qubit >= labels_.size()) throw std::out_of_range("qubit out of range");
    return labels_[physical_qubit];
}

std::vector<unsigned> TrackerState::logical_line(unsigned logical_index) const {
    if (logical_index >= n_logical_) throw std::out_of_range("logical index out of range");
    std::vector<unsigned> out;
    for (unsigned q = 0; q < labels_.size(); ++q)
        if (labels_[q].contains(logical_index)) out.push_back(q);
    return out;
}

std::optional<std::vector<LabelSet>> TrackerState::x_basis_labels() const {
    if (labels_.size() != n_logical_) return std::nullopt;
    std::vector<std::uint64_t> rows;
    rows.reserve(labels_.size());
    for (const auto& l : labels_) rows.push_back(l.mask());
    auto inv = gf2::invert(rows, n_logical_);
    if (!inv) return std::nullopt;
    auto q = gf2::transpose(*inv, n_logical_);
    std::vector<LabelSet> out;
    out.reserve(q.size());
    for (auto m : q) out.emplace_back(m);
    return out;
}

std::vector<TrackerState::Stabilizer> TrackerState::stabilizer_supports() const {
    std::vector<Stabilizer> out;
    for (std::size_t i = 0; i < stab_seeds_.size(); ++i) {
        Stabilizer s;
        s.seed = stab_seeds_[i];
        for (unsigned q = 0; q < labels_.size(); ++q)
            if (stab_supports_[i] >> q & 1) s.support.push_back(q);
        out.push_back(std::move(s));
    }
    return out;
}

std::optional<std::vector<int>> TrackerState::decode_bitstring(const std::vector<int>& bits) const {
    if (bits.size() != labels_.size()) return std::nullopt;
    std::vector<std::uint64_t> rows;
    rows.reserve(labels_.size());
    for (const auto& l : labels_) rows.push_back(l.mask());
    auto x = gf2::solve(rows, bits, n_logical_);
    if (!x) return std::nullopt;
    std::vector<int> out(n_logical_);
    for (unsigned j = 0; j < n_logical_; ++j) out[j] = static_cast<int>(*x >> j & 1);
    return out;
}

int TrackerState::rank() const {
    return gf2::rank(labels_);
}

namespace {

bool cnots_commute(const Gate& a, const Gate& b) {
    // CNOTs commute unless one's control is the other's target.
    return a.q0 != b.q1 && b.q0 != a.q1;
}

}  // namespace

TrackResult track_circuit(const Circuit& c, TrackerState initial,
                          TrackGranularity granularity,
                          const std::vector<std::size_t>& boundaries) {
    std::vector<Gate> cnots;
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            cnots.push_back(g);
        } else if (g.is_measurement()) {
            continue;  // measurement legality is the simulator's concern
        } else {
            throw std::invalid_argument("label tracker accepts CNOT circuits only");
        }
    }
    TrackResult res{std::move(initial), {}};
    res.history.push_back({0, res.final_state.labels()});

    std::vector<std::size_t> cuts;
    if (!boundaries.empty()) {
        std::size_t acc = 0;
        for (std::size_t b : boundaries) {
            acc += b;
            cuts.push_back(acc);
        }
        if (acc != cnots.size())
            throw std::invalid_argument("round boundaries do not sum to CNOT count");
    } else if (granularity == TrackGranularity::PerGate) {
        for (std::size_t i = 1; i <= cnots.size(); ++i) cuts.push_back(i);
    } else {
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cnots.size(); ++i) {
            bool boundary = (i == cnots.size());
            if (!boundary) {
                for (std::size_t j = start; j < i; ++j) {
                    if (!cnots_commute(cnots[j], cnots[i])) { boundary = true; break; }
                }
            }
            if (boundary) {
                cuts.push_back(i);
                start = i;
            }
        }
    }

    std::size_t next = 0;
    std::size_t lambda = 0;
    for (std::size_t i = 0; i < cnots.size(); ++i) {
        res.final_state.apply_cnot(static_cast<unsigned>(cnots[i].q0),
                                   static_cast<unsigned>(cnots[i].q1));
        if (next < cuts.size() && i + 1 == cuts[next]) {
            ++lambda;
            ++next;
            res.history.push_back({lambda, res.final_state.labels()});
        }
    }
    return res;
}

}  // namespace paritylane
