#ifndef NILCERT_LINALG_HPP
#define NILCERT_LINALG_HPP

#include <nilcert/matrix.hpp>
#include <nilcert/partition.hpp>

#include <cstddef>
#include <vector>

namespace nilcert {

// Rectangular rational matrix as rows; used only by the solver routines.
using RowMatrix = std::vector<std::vector<Rational>>;

// Exact rank by fraction-free (Bareiss) elimination: rows are cleared of
// denominators first, then eliminated with exact integer divisions only.
std::size_t rational_rank(const RowMatrix &rows);
std::size_t rational_rank(const RationalMatrix &m);

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<std::size_t> rref_in_place(RowMatrix &rows);

// Basis of the right kernel {v : A v = 0}, one vector per free column,
// in ascending free-column order (deterministic).
std::vector<std::vector<Rational>> kernel_basis(const RowMatrix &a);

// Exact inverse; throws std::domain_error on singular input.
RationalMatrix rational_inverse(const RationalMatrix &m);

RationalMatrix rational_power(const RationalMatrix &m, std::size_t k);

// Jordan type of a nilpotent matrix: the partition whose dual has parts
// rank(N^{k-1}) - rank(N^k). Non-nilpotent input is rejected, naming the
// smallest power at which the rank sequence bottoms out above zero.
Partition jordan_type(const RationalMatrix &n);

} // namespace nilcert

#endif
