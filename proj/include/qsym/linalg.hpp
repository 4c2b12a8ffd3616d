#ifndef QSYM_LINALG_HPP
#define QSYM_LINALG_HPP

#include <gmpxx.h>

#include <vector>

#include "qsym/rings.hpp"

namespace qsym::linalg {

using QMatrix = std::vector<std::vector<mpq_class>>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

/// Row-reduces m in place over the field (Q or F_p); returns the rank.
/// Deterministic: first nonzero pivot column order, rows swapped minimally.
int rref(const Ring& field, QMatrix& m);

int rank(const Ring& field, QMatrix m);

/// Basis of the right kernel {x : m x = 0}, in reduced echelon form with
/// respect to the column order (deterministic).
std::vector<std::vector<mpq_class>> kernel_basis(const Ring& field, QMatrix m);

/// Exact rank of an integer matrix (fraction-free Bareiss elimination).
int rank_integer(ZMatrix m);

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
std::vector<mpz_class> smith_invariant_factors(ZMatrix m);

}  // namespace qsym::linalg

#endif
