#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wld {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

/// Row-reduces in place to reduced row echelon form and returns the rank.
/// Zero rows are dropped, so afterwards matrix.size() == rank.
int reduce_to_rref(RationalMatrix& matrix);

int matrix_rank(RationalMatrix matrix);

/// Reduced echelon basis of the row span; equal spans give equal bases.
RationalMatrix row_span_basis(RationalMatrix rows);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace wld
