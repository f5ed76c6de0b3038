#include "paritylane/gf2.hpp"

#include <algorithm>

namespace paritylane::gf2 {

int rank(const std::vector<std::uint64_t>& rows_in) {
    std::vector<std::uint64_t> rows = rows_in;
    int r = 0;
    for (unsigned bit = 0; bit < 64; ++bit) {
        int piv = -1;
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i] >> bit & 1) { piv = static_cast<int>(i); break; }
        }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
        }
        ++r;
    }
    return r;
}

int rank(const std::vector<LabelSet>& rows) {
    std::vector<std::uint64_t> m;
    m.reserve(rows.size());
    for (const auto& l : rows) m.push_back(l.mask());
    return rank(m);
}

std::optional<std::vector<std::uint64_t>> invert(const std::vector<std::uint64_t>& rows,
                                                 unsigned n) {
    if (rows.size() != n) return std::nullopt;
    std::vector<std::uint64_t> m = rows;
    std::vector<std::uint64_t> inv(n);
    for (unsigned i = 0; i < n; ++i) inv[i] = std::uint64_t{1} << i;
    for (unsigned col = 0; col < n; ++col) {
        int piv = -1;
        for (unsigned i = col; i < n; ++i) {
            if (m[i] >> col & 1) { piv = static_cast<int>(i); break; }
        }
        if (piv < 0) return std::nullopt;
        std::swap(m[col], m[static_cast<unsigned>(piv)]);
        std::swap(inv[col], inv[static_cast<unsigned>(piv)]);
        for (unsigned i = 0; i < n; ++i) {
            if (i != col && (m[i] >> col & 1)) {
                m[i] ^= m[col];
                inv[i] ^= inv[col];
            }
        }
    }
    return inv;
}

std::vector<std::uint64_t> transpose(const std::vector<std::uint64_t>& rows, unsigned n) {
    std::vector<std::uint64_t> out(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (rows[i] >> j & 1) out[j] |= std::uint64_t{1} << i;
    return out;
}

std::optional<std::uint64_t> solve(const std::vector<std::uint64_t>& rows,
                                   const std::vector<int>& rhs, unsigned n_cols) {
    if (rows.size() != rhs.size()) return std::nullopt;
    std::vector<std::uint64_t> m = rows;
    std::vector<int> b = rhs;
    std::vector<int> pivot_row(n_cols, -1);
    unsigned r = 0;
    for (unsigned col = 0; col < n_cols && r < m.size(); ++col) {
        int piv = -1;
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i] >> col & 1) { piv = static_cast<int>(i); break; }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[static_cast<unsigned>(piv)]);
        std::swap(b[r], b[static_cast<unsigned>(piv)]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && (m[i] >> col & 1)) { m[i] ^= m[r]; b[i] ^= b[r]; }
        }
        pivot_row[col] = static_cast<int>(r);
        ++r;
    }
    // rank must be full over the columns, and leftover rows consistent
    std::uint64_t x = 0;
    for (unsigned col = 0; col < n_cols; ++col) {
        if (pivot_row[col] < 0) return std::nullopt;  // singular
        if (b[static_cast<unsigned>(pivot_row[col])])
            x |= std::uint64_t{1} << col;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        int lhs = std::popcount(m[i] & x) & 1;
        if (lhs != (b[i] & 1)) return std::nullopt;  // inconsistent
    }
    return x;
}

std::optional<std::vector<std::uint64_t>> express(const std::vector<std::uint64_t>& basis,
                                                  const std::vector<std::uint64_t>& targets,
                                                  unsigned n_cols) {
    std::vector<std::uint64_t> rows = basis;
    std::vector<std::uint64_t> combo(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) combo[i] = std::uint64_t{1} << i;
    std::vector<int> piv_of_bit(n_cols, -1);
    std::vector<bool> used(rows.size(), false);
    for (unsigned bit = 0; bit < n_cols; ++bit) {
        int sel = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && (rows[i] >> bit & 1)) { sel = static_cast<int>(i); break; }
        }
        if (sel < 0) continue;
        used[static_cast<std::size_t>(sel)] = true;
        piv_of_bit[bit] = sel;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) != sel && (rows[i] >> bit & 1)) {
                rows[i] ^= rows[static_cast<std::size_t>(sel)];
                combo[i] ^= combo[static_cast<std::size_t>(sel)];
            }
        }
    }
    std::vector<std::uint64_t> out;
    out.reserve(targets.size());
    for (std::uint64_t t : targets) {
        std::uint64_t c = 0;
        std::uint64_t rem = t;
        for (unsigned bit = 0; bit < n_cols && rem; ++bit) {
            if (rem >> bit & 1) {
                int sel = piv_of_bit[bit];
                if (sel < 0) return std::nullopt;
                rem ^= rows[static_cast<std::size_t>(sel)];
                c ^= combo[static_cast<std::size_t>(sel)];
            }
        }
        if (rem != 0) return std::nullopt;
        out.push_back(c);
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> reduction_ops(std::vector<std::uint64_t> rows,
                                                         unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> ops;
    auto rowxor = [&](unsigned c, unsigned t) {
        rows[t] ^= rows[c];
        ops.emplace_back(c, t);
    };
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && !(rows[piv] >> col & 1)) ++piv;
        if (piv >= n) throw std::invalid_argument("singular label matrix");
        if (piv != col) {
            // swap rows via three xors
            rowxor(piv, col);
            rowxor(col, piv);
            rowxor(piv, col);
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r != col && (rows[r] >> col & 1)) rowxor(col, r);
        }
    }
    return ops;
}

}  // namespace paritylane::gf2
