#include "wld/rational.hpp"

#include <stdexcept>
#include <utility>

namespace wld {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

int reduce_to_rref(RationalMatrix& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t cols = matrix.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < matrix.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < matrix.size() && sgn(matrix[found][col]) == 0) ++found;
    if (found == matrix.size()) continue;
    std::swap(matrix[pivot_row], matrix[found]);
    Rational inv = 1 / matrix[pivot_row][col];
    for (auto& x : matrix[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r == pivot_row || sgn(matrix[r][col]) == 0) continue;
      Rational factor = matrix[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        matrix[r][c] -= factor * matrix[pivot_row][c];
      }
    }
    ++pivot_row;
  }
  matrix.resize(pivot_row);
  return static_cast<int>(pivot_row);
}

int matrix_rank(RationalMatrix matrix) { return reduce_to_rref(matrix); }

RationalMatrix row_span_basis(RationalMatrix rows) {
  reduce_to_rref(rows);
  return rows;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace wld
