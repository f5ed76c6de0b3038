#include "paritylane/lhz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "paritylane/gf2.hpp"

namespace paritylane {

bool SpanningLine::valid() const {
    for (const auto& l : labels) {
        int w = l.weight();
        if (w < 1 || w > 2) return false;
    }
    return rank() == static_cast<int>(labels.size());
}

int SpanningLine::rank() const {
    return gf2::rank(labels);
}

SpanningLine base_line(unsigned n) {
    if (n < 2) throw std::invalid_argument("base line needs n >= 2");
    SpanningLine line;
    for (unsigned i = 0; i < n; ++i) line.labels.push_back(LabelSet::single(i));
    return line;
}

SpanningLine mirrored_line(const SpanningLine& line) {
    SpanningLine out = line;
    std::reverse(out.labels.begin(), out.labels.end());
    return out;
}

std::pair<CnotList, SpanningLine> deform(const SpanningLine& line, unsigned position,
                                         const std::vector<unsigned>& neighbours) {
    if (position >= line.size()) throw std::out_of_range("deform position out of range");
    LabelSet next = line.labels[position];
    CnotList cnots;
    for (unsigned nb : neighbours) {
        if (!((nb + 1 == position) || (nb == position + 1)))
            throw std::invalid_argument("deform neighbour must be adjacent on the chain");
        if (nb >= line.size()) throw std::out_of_range("neighbour out of range");
        next ^= line.labels[nb];
        cnots.emplace_back(nb, position);
    }
    if (next.weight() > 2)
        throw std::invalid_argument("illegal deformation: resulting label weight > 2");
    SpanningLine out = line;
    out.labels[position] = next;
    return {cnots, out};
}

CnotList ProgressionRound::all() const {
    CnotList out = layer1;
    out.insert(out.end(), layer2.begin(), layer2.end());
    return out;
}

std::vector<SpanningLine> ProgressionSchedule::lines() const {
    std::vector<SpanningLine> out{start};
    for (const auto& r : rounds) out.push_back(r.line_after);
    return out;
}

std::size_t ProgressionSchedule::cnot_count() const {
    std::size_t c = 0;
    for (const auto& r : rounds) c += r.layer1.size() + r.layer2.size();
    return c;
}

std::vector<LabelSet> ProgressionSchedule::label_union() const {
    std::set<LabelSet> seen;
    for (const auto& line : lines())
        for (const auto& l : line.labels) seen.insert(l);
    return {seen.begin(), seen.end()};
}

namespace detail {

std::vector<unsigned> zigzag_wires(unsigned n) {
    // tokens n-1..0 with the ground (value n) inserted at position n-2
    std::vector<unsigned> wires;
    for (unsigned t = n; t-- > 0;) wires.push_back(t);
    wires.insert(wires.begin() + (n - 2), n);
    return wires;
}

unsigned first_parity(unsigned n) {
    return (n - 1) % 2;
}

SpanningLine gaps_of_wires(const std::vector<unsigned>& wires, unsigned n) {
    SpanningLine line;
    for (unsigned k = 0; k + 1 < wires.size(); ++k) {
        LabelSet l;
        if (wires[k] < n) l ^= LabelSet::single(wires[k]);
        if (wires[k + 1] < n) l ^= LabelSet::single(wires[k + 1]);
        line.labels.push_back(l);
    }
    return line;
}

std::pair<CnotList, CnotList> tau_round_layers(unsigned n, unsigned parity) {
    // Fan-out compilation of wire swaps at boundaries j == parity (mod 2).
    // Up-CNOTs first so that cross-round back-to-back pairs (j -> j-1) then
    // (j-1 -> j) stay adjacent for the iSWAP rewrite.
    CnotList ups, downs;
    for (unsigned j = parity; j < n; j += 2) {
        if (j + 1 <= n - 1) ups.emplace_back(j, j + 1);
        if (j >= 1) downs.emplace_back(j, j - 1);
    }
    return {ups, downs};
}

}  // namespace detail

namespace {

SpanningLine apply_layers(const SpanningLine& in, const CnotList& l1, const CnotList& l2) {
    SpanningLine out = in;
    for (const auto& [c, t] : l1) out.labels[t] ^= out.labels[c];
    for (const auto& [c, t] : l2) out.labels[t] ^= out.labels[c];
    return out;
}

ProgressionSchedule brick_walk(unsigned n, std::size_t round_offset, std::size_t n_rounds) {
    ProgressionSchedule sched;
    sched.n = n;
    std::vector<unsigned> wires = detail::zigzag_wires(n);
    unsigned parity = detail::first_parity(n);
    SpanningLine line = detail::gaps_of_wires(wires, n);
    for (std::size_t r = 0; r < round_offset; ++r) {
        auto [ups, downs] = detail::tau_round_layers(n, parity);
        line = apply_layers(line, ups, downs);
        parity ^= 1;
    }
    sched.start = line;
    for (std::size_t r = 0; r < n_rounds; ++r) {
        auto [ups, downs] = detail::tau_round_layers(n, parity);
        ProgressionRound round;
        round.layer1 = ups;
        round.layer2 = downs;
        line = apply_layers(line, ups, downs);
        round.line_after = line;
        sched.rounds.push_back(std::move(round));
        parity ^= 1;
    }
    // group rounds pairwise into steps; a trailing single round is the half step
    for (std::size_t i = 0; i < sched.rounds.size(); i += 2) {
        ProgressionStep step;
        step.rounds.push_back(sched.rounds[i]);
        if (i + 1 < sched.rounds.size()) step.rounds.push_back(sched.rounds[i + 1]);
        step.line_after = step.rounds.back().line_after;
        sched.steps.push_back(std::move(step));
    }
    return sched;
}

// QFT walk: descending staircase entry, then ascending pair-op sweeps of
// lengths n-1 .. 1, regrouped greedily into depth-2 rounds.
ProgressionSchedule qft_walk(unsigned n) {
    ProgressionSchedule sched;
    sched.n = n;
    sched.start = base_line(n);
    CnotList stream;
    for (unsigned k = 1; k < n; ++k) stream.emplace_back(k, k - 1);
    for (unsigned s = n - 1; s >= 1; --s) {
        for (unsigned e = 0; e < s; ++e) {
            stream.emplace_back(e, e + 1);
            stream.emplace_back(e + 1, e);
        }
    }
    SpanningLine line = sched.start;
    std::vector<int> busy(n, 0);
    int block = 0;
    ProgressionRound cur;
    auto flush = [&]() {
        if (cur.layer1.empty() && cur.layer2.empty()) return;
        cur.line_after = line;
        sched.rounds.push_back(cur);
        cur = ProgressionRound{};
    };
    for (const auto& [c, t] : stream) {
        int depth = std::max(busy[c], busy[t]) + 1;
        int want_block = (depth - 1) / 2;
        if (want_block != block) {
            flush();
            block = want_block;
        }
        line.labels[t] ^= line.labels[c];
        if (depth == 2 * block + 1) cur.layer1.emplace_back(c, t);
        else cur.layer2.emplace_back(c, t);
        busy[c] = busy[t] = depth;
    }
    flush();
    for (std::size_t i = 0; i < sched.rounds.size(); i += 2) {
        ProgressionStep step;
        step.rounds.push_back(sched.rounds[i]);
        if (i + 1 < sched.rounds.size()) step.rounds.push_back(sched.rounds[i + 1]);
        step.line_after = step.rounds.back().line_after;
        sched.steps.push_back(std::move(step));
    }
    return sched;
}

}  // namespace

ProgressionSchedule progression_schedule(unsigned n, ScheduleVariant variant) {
    if (n < 2) throw std::invalid_argument("progression needs n >= 2");
    if (n > 64) throw std::invalid_argument("n exceeds label capacity (64)");
    if (variant == ScheduleVariant::QaoaLinear) return brick_walk(n, 0, n - 1);
    return qft_walk(n);
}

ProgressionSchedule progression_schedule_from(unsigned n, std::size_t round_offset,
                                              std::size_t n_rounds) {
    if (n < 2) throw std::invalid_argument("progression needs n >= 2");
    return brick_walk(n, round_offset, n_rounds);
}

}  // namespace paritylane
