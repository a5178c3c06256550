#pragma once

#include "starpi/exactmath/poly.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace starpi {

/// 1-based upper-triangular position (row <= col).
struct Position {
  std::uint32_t row = 1;
  std::uint32_t col = 1;

  auto operator<=>(const Position&) const = default;
};

inline std::string to_string(const Position& p) {
  return "e" + std::to_string(p.row) + "_" + std::to_string(p.col);
}

/// Row-major packed index of an upper-triangular position in UT_n.
inline std::size_t packed_index(std::uint32_t n, const Position& p) {
  const std::size_t r = p.row - 1;
  return r * n - r * (r - 1) / 2 + (p.col - p.row);
}

inline std::vector<Position> ut_positions(std::uint32_t n) {
  std::vector<Position> out;
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint32_t j = i; j <= n; ++j) out.push_back({i, j});
  return out;
}

/// n x n upper-triangular matrix over a commutative ring T (Scalar or Poly).
template <class T>
class UpperMatrix {
public:
  UpperMatrix() = default;
  explicit UpperMatrix(std::uint32_t n) : n_(n), entries_(std::size_t(n) * (n + 1) / 2) {}

  static UpperMatrix identity(std::uint32_t n) {
    UpperMatrix m(n);
    for (std::uint32_t i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
  }
  static UpperMatrix unit(std::uint32_t n, Position p) {
    UpperMatrix m(n);
    m.at(p) = T(1);
    return m;
  }

  std::uint32_t size() const { return n_; }

  T& operator()(std::uint32_t i, std::uint32_t j) { return entries_[packed_index(n_, {i, j})]; }
  const T& operator()(std::uint32_t i, std::uint32_t j) const {
    return entries_[packed_index(n_, {i, j})];
  }
  T& at(const Position& p) { return entries_[packed_index(n_, p)]; }
  const T& at(const Position& p) const { return entries_[packed_index(n_, p)]; }

  const std::vector<T>& packed() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!entry_is_zero(e)) return false;
    return true;
  }

  UpperMatrix& operator+=(const UpperMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  UpperMatrix& operator-=(const UpperMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  template <class S>
  UpperMatrix& scale(const S& s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend UpperMatrix operator+(UpperMatrix a, const UpperMatrix& b) { return a += b; }
  friend UpperMatrix operator-(UpperMatrix a, const UpperMatrix& b) { return a -= b; }
  friend UpperMatrix operator*(const Scalar& s, UpperMatrix a) { return a.scale(s); }

  friend UpperMatrix operator*(const UpperMatrix& a, const UpperMatrix& b) {
    a.check_same(b);
    const auto n = a.n_;
    UpperMatrix c(n);
    for (std::uint32_t i = 1; i <= n; ++i)
      for (std::uint32_t k = i; k <= n; ++k) {
        const T& aik = a(i, k);
        if (entry_is_zero(aik)) continue;
        for (std::uint32_t j = k; j <= n; ++j) {
          const T& bkj = b(k, j);
          if (entry_is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  bool operator==(const UpperMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

  void check_same(const UpperMatrix& o) const {
    if (n_ != o.n_)
      throw ShapeError("matrix size mismatch: " + std::to_string(n_) + " vs " +
                       std::to_string(o.n_));
  }

private:
  static bool entry_is_zero(const T& e) {
    if constexpr (std::is_same_v<T, Poly>)
      return e.is_zero();
    else
      return starpi::is_zero(e);
  }

  std::uint32_t n_ = 0;
  std::vector<T> entries_;
};

using RatMatrix = UpperMatrix<Scalar>;
using PolyMatrix = UpperMatrix<Poly>;

inline PolyMatrix to_poly_matrix(const RatMatrix& m) {
  PolyMatrix out(m.size());
  const auto pos = ut_positions(m.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out.at(pos[k]) = Poly(m.at(pos[k]));
  return out;
}

/// Specializes every entry; throws MissingAssignment if a parameter is unset.
inline RatMatrix evaluate(const PolyMatrix& m, const std::map<ParamId, Scalar>& values) {
  RatMatrix out(m.size());
  const auto pos = ut_positions(m.size());
  for (std::size_t k = 0; k < pos.size(); ++k) out.at(pos[k]) = m.at(pos[k]).eval(values);
  return out;
}

/// Sum of matrix units, e.g. "e11+e44", "2e13-1/2e24", "e[10,12]", "I", "0".
inline std::string to_string(const RatMatrix& m) {
  std::string s;
  for (const auto& p : ut_positions(m.size())) {
    const Scalar& c = m.at(p);
    if (is_zero(c)) continue;
    const Scalar mag = abs(c);
    if (s.empty())
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str();
    if (m.size() <= 9)
      s += "e" + std::to_string(p.row) + std::to_string(p.col);
    else
      s += "e[" + std::to_string(p.row) + "," + std::to_string(p.col) + "]";
  }
  return s.empty() ? "0" : s;
}

/// Parses the notation produced by to_string(RatMatrix) for an n x n matrix.
inline RatMatrix parse_rat_matrix(std::string_view text, std::uint32_t n) {
  RatMatrix m(n);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) -> RatMatrix {
    throw Error("matrix text '" + std::string(text) + "' at position " + std::to_string(i) +
                ": " + what);
  };
  skip();
  if (text.substr(i) == "0") return m;
  bool first = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    Scalar sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    Scalar coeff = 1;
    if (i > start) coeff = parse_scalar(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 'I') {
      ++i;
      for (std::uint32_t k = 1; k <= n; ++k) m(k, k) += sign * coeff;
      continue;
    }
    if (i >= text.size() || text[i] != 'e') return fail("expected matrix unit 'eIJ'");
    ++i;
    std::uint32_t r = 0;
    std::uint32_t c = 0;
    if (i < text.size() && text[i] == '[') {
      ++i;
      std::size_t s0 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == s0 || i >= text.size() || text[i] != ',') return fail("expected e[row,col]");
      r = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(s0, i - s0))));
      ++i;
      s0 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == s0 || i >= text.size() || text[i] != ']') return fail("expected e[row,col]");
      c = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(s0, i - s0))));
      ++i;
    } else {
      if (i + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])) ||
          !std::isdigit(static_cast<unsigned char>(text[i + 1])))
        return fail("expected two index digits");
      r = static_cast<std::uint32_t>(text[i] - '0');
      c = static_cast<std::uint32_t>(text[i + 1] - '0');
      i += 2;
    }
    if (r < 1 || c < r || c > n)
      return fail("unit e" + std::to_string(r) + "," + std::to_string(c) +
                  " is not an upper-triangular position of UT_" + std::to_string(n));
    m(r, c) += sign * coeff;
  }
  return m;
}

} // namespace starpi
