#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paritylane/labelset.hpp"

namespace paritylane::gf2 {

// Rank of the matrix whose rows are the given bit masks.
int rank(const std::vector<std::uint64_t>& rows);
int rank(const std::vector<LabelSet>& rows);

// Inverse of a square n x n bit matrix (rows[i] bit j = entry (i,j)).
// Returns nullopt when singular.
std::optional<std::vector<std::uint64_t>> invert(const std::vector<std::uint64_t>& rows,
                                                 unsigned n);

// Transpose of an n x n bit matrix.
std::vector<std::uint64_t> transpose(const std::vector<std::uint64_t>& rows, unsigned n);

// Solve M x = b for x where M has the given rows (may be rectangular with
// more rows than columns; consistency is required).  Returns nullopt when
// the system is singular or inconsistent.
std::optional<std::uint64_t> solve(const std::vector<std::uint64_t>& rows,
                                   const std::vector<int>& rhs, unsigned n_cols);

// Express each target as an XOR of basis rows: result[k] is a mask over
// basis indices with xor_{i in mask} basis[i] == targets[k].  Requires the
// basis to span all targets.
std::optional<std::vector<std::uint64_t>> express(const std::vector<std::uint64_t>& basis,
                                                  const std::vector<std::uint64_t>& targets,
                                                  unsigned n_cols);

// Row operations (c, t) meaning row[t] ^= row[c] that reduce `rows` (square,
// invertible) to the identity when applied in order.
std::vector<std::pair<unsigned, unsigned>> reduction_ops(std::vector<std::uint64_t> rows,
                                                         unsigned n);

}  // namespace paritylane::gf2
