#pragma once

#include "starpi/exactmath/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace starpi {

using ScalarVector = std::vector<Scalar>;
using ScalarRows = std::vector<ScalarVector>;

namespace detail {

inline std::size_t common_width(const ScalarRows& rows) {
  if (rows.empty()) return 0;
  const auto width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw ShapeError("ragged matrix: rows of different length");
  return width;
}

/// Scales a rational row to a primitive-free integer row with the same span.
inline std::vector<BigInt> integer_row(const ScalarVector& row) {
  BigInt l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(row.size());
  for (const auto& q : row) out.emplace_back(q.get_num() * (l / q.get_den()));
  return out;
}

} // namespace detail

/// Exact rank over Q by Bareiss fraction-free elimination on integer rows.
/// Column-skipping Bareiss keeps every division exact: after k pivots each
/// entry is a (k+1)-minor over the chosen pivot columns.
inline std::size_t matrix_rank(const ScalarRows& rows) {
  const auto width = detail::common_width(rows);
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    bool nonzero = false;
    for (const auto& q : r) nonzero = nonzero || !is_zero(q);
    if (nonzero) m.push_back(detail::integer_row(r));
  }
  const auto height = m.size();
  std::size_t rank = 0;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t col = 0; col < width && rank < height; ++col) {
    std::size_t pivot = rank;
    while (pivot < height && m[pivot][col] == 0) ++pivot;
    if (pivot == height) continue;
    std::swap(m[pivot], m[rank]);
    const BigInt& p = m[rank][col];
    for (std::size_t i = rank + 1; i < height; ++i) {
      const BigInt f = m[i][col];
      for (std::size_t j = col + 1; j < width; ++j) {
        t = p * m[i][j];
        t -= f * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<ScalarVector> linear_solve(const ScalarRows& a, const ScalarVector& b) {
  const auto width = detail::common_width(a);
  if (a.size() != b.size())
    throw ShapeError("linear_solve: matrix has " + std::to_string(a.size()) +
                     " rows but right-hand side has " + std::to_string(b.size()));
  const auto height = a.size();
  ScalarRows m(height);
  for (std::size_t i = 0; i < height; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < height; ++col) {
    std::size_t p = r;
    while (p < height && is_zero(m[p][col])) ++p;
    if (p == height) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = 1 / m[r][col];
    for (std::size_t j = col; j <= width; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < height; ++i) {
      if (i == r || is_zero(m[i][col])) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j <= width; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < height; ++i)
    if (!is_zero(m[i][width])) return std::nullopt;
  ScalarVector x(width, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = m[i][width];
  return x;
}

inline ScalarRows transpose(const ScalarRows& rows) {
  const auto width = detail::common_width(rows);
  ScalarRows out(width, ScalarVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) out[j][i] = rows[i][j];
  return out;
}

} // namespace starpi
