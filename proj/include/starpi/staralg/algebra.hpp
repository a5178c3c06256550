#pragma once

#include "starpi/staralg/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starpi {

class SpecError : public Error {
public:
  using Error::Error;
};

/// Elementary Z2-grading of UT_n: deg e_kj = g_k + g_j mod 2.
class GradingSeq {
public:
  GradingSeq() = default;
  explicit GradingSeq(std::vector<std::uint8_t> g) : g_(std::move(g)) {
    for (auto v : g_)
      if (v > 1) throw SpecError("grading entries must be 0 or 1");
  }

  /// "0101" -> (0,1,0,1)
  static GradingSeq parse(std::string_view text) {
    std::vector<std::uint8_t> g;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw SpecError("malformed grading '" + std::string(text) + "': only 0/1 allowed");
      g.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (g.empty()) throw SpecError("empty grading");
    return GradingSeq(std::move(g));
  }

  static GradingSeq trivial(std::uint32_t n) { return GradingSeq(std::vector<std::uint8_t>(n, 0)); }

  /// (0,1,0,1,...) of length n.
  static GradingSeq alternating(std::uint32_t n) {
    std::vector<std::uint8_t> g(n);
    for (std::uint32_t i = 0; i < n; ++i) g[i] = static_cast<std::uint8_t>(i % 2);
    return GradingSeq(std::move(g));
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(g_.size()); }
  std::uint8_t operator[](std::uint32_t i) const { return g_.at(i - 1); } // 1-based
  const std::vector<std::uint8_t>& entries() const { return g_; }

  std::uint8_t degree(const Position& p) const { return (*this)[p.row] ^ (*this)[p.col]; }

  /// g_1+g_n = g_2+g_{n-1} = ... (mod 2)
  bool is_star_type() const {
    const auto n = size();
    for (std::uint32_t i = 1; i <= n; ++i)
      if (((*this)[i] ^ (*this)[n + 1 - i]) != ((*this)[1] ^ (*this)[n])) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (auto v : g_) s += static_cast<char>('0' + v);
    return s;
  }

  bool operator==(const GradingSeq&) const = default;

private:
  std::vector<std::uint8_t> g_;
};

enum class InvolutionKind { reflection, symplectic, super_reflection, super_symplectic };

inline std::string to_string(InvolutionKind k) {
  switch (k) {
  case InvolutionKind::reflection: return "reflection";
  case InvolutionKind::symplectic: return "symplectic";
  case InvolutionKind::super_reflection: return "super-reflection";
  case InvolutionKind::super_symplectic: return "super-symplectic";
  }
  return "?";
}

inline InvolutionKind parse_involution_kind(std::string_view s) {
  if (s == "reflection") return InvolutionKind::reflection;
  if (s == "symplectic") return InvolutionKind::symplectic;
  if (s == "super-reflection") return InvolutionKind::super_reflection;
  if (s == "super-symplectic") return InvolutionKind::super_symplectic;
  throw SpecError("unknown involution kind '" + std::string(s) +
                  "' (expected reflection, symplectic, super-reflection, super-symplectic)");
}

inline bool is_super(InvolutionKind k) {
  return k == InvolutionKind::super_reflection || k == InvolutionKind::super_symplectic;
}
inline bool is_symplectic(InvolutionKind k) {
  return k == InvolutionKind::symplectic || k == InvolutionKind::super_symplectic;
}

enum class Symmetry : std::uint8_t { plus, minus };

/// One of the four homogeneous symmetry components A_0^+, A_0^-, A_1^+, A_1^-.
struct ComponentTag {
  std::uint8_t parity = 0;
  Symmetry symmetry = Symmetry::plus;

  /// Position in (A0+, A0-, A1+, A1-).
  std::size_t index() const { return parity * 2u + (symmetry == Symmetry::minus ? 1u : 0u); }
  static ComponentTag from_index(std::size_t i) {
    return {static_cast<std::uint8_t>(i / 2), i % 2 ? Symmetry::minus : Symmetry::plus};
  }
  bool operator==(const ComponentTag&) const = default;
};

inline std::string to_string(const ComponentTag& t) {
  return std::string("A") + char('0' + t.parity) + (t.symmetry == Symmetry::plus ? "+" : "-");
}

struct SignedPosition {
  Position pos;
  int sign = 1;
  bool operator==(const SignedPosition&) const = default;
};

/// Basis element of a component: e_p + s*e_q (an orbit of the star table)
/// or a single unit. `representative` is the smaller position and names the
/// generic parameter attached to this element.
struct BasisElement {
  std::vector<SignedPosition> units;
  Position representative;

  RatMatrix matrix(std::uint32_t n) const {
    RatMatrix m(n);
    for (const auto& u : units) m.at(u.pos) = u.sign;
    return m;
  }
  bool operator==(const BasisElement&) const = default;
};

/// UT_n with an elementary grading and a (super)involution. Immutable.
class StarAlgebraSpec {
public:
  std::uint32_t n() const { return n_; }
  const GradingSeq& grading() const { return grading_; }
  InvolutionKind kind() const { return kind_; }

  /// Image of the unit at p under the involution.
  const SignedPosition& star(const Position& p) const { return star_table_[packed_index(n_, p)]; }
  const std::vector<SignedPosition>& star_table() const { return star_table_; }

  const std::vector<BasisElement>& component(const ComponentTag& t) const {
    return components_[t.index()];
  }
  const std::array<std::vector<BasisElement>, 4>& components() const { return components_; }

  std::array<std::size_t, 4> component_dims() const {
    return {components_[0].size(), components_[1].size(), components_[2].size(),
            components_[3].size()};
  }

  /// Filtration length L(p): longest chain of odd units multiplying to e_p.
  std::uint32_t odd_chain_length(const Position& p) const { return chain_[packed_index(n_, p)]; }

  /// Sign of the superautomorphism phi on e_p: (-1)^floor(L/2).
  int phi_sign(const Position& p) const { return (odd_chain_length(p) / 2) % 2 == 0 ? 1 : -1; }

  std::string id() const { return "UT" + std::to_string(n_) + "(" + grading_.str() + ", " + to_string(kind_) + ")"; }

  friend StarAlgebraSpec build_algebra(std::uint32_t, const GradingSeq&, InvolutionKind);

private:
  std::uint32_t n_ = 0;
  GradingSeq grading_;
  InvolutionKind kind_ = InvolutionKind::reflection;
  std::vector<SignedPosition> star_table_;
  std::vector<std::uint32_t> chain_;
  std::array<std::vector<BasisElement>, 4> components_;
};

namespace detail {

/// Longest alternating-parity chain i = i0 < i1 < ... < ik = j; 0 when none
/// exists (then e_ij lies only in (A_1)^0 = A).
inline std::vector<std::uint32_t> odd_chain_lengths(const GradingSeq& g) {
  const auto n = g.size();
  // best[i][j] = longest chain, -1 if none; chain(i,i) = 0
  std::vector<std::vector<int>> best(n + 2, std::vector<int>(n + 2, -1));
  for (std::uint32_t i = n; i >= 1; --i) {
    best[i][i] = 0;
    for (std::uint32_t j = i + 1; j <= n; ++j)
      for (std::uint32_t k = i + 1; k <= j; ++k)
        if (g[k] != g[i] && best[k][j] >= 0) best[i][j] = std::max(best[i][j], 1 + best[k][j]);
  }
  std::vector<std::uint32_t> out;
  for (const auto& p : ut_positions(n)) out.push_back(static_cast<std::uint32_t>(std::max(0, best[p.row][p.col])));
  return out;
}

/// Deterministic order: diagonal representatives first (by row), then by
/// distance from the diagonal and row.
inline bool basis_order(const BasisElement& a, const BasisElement& b) {
  const auto& p = a.representative;
  const auto& q = b.representative;
  const bool pd = p.row == p.col;
  const bool qd = q.row == q.col;
  if (pd != qd) return pd;
  const auto op = p.col - p.row;
  const auto oq = q.col - q.row;
  if (op != oq) return op < oq;
  return p.row < q.row;
}

} // namespace detail

/// Builds UT_n with the given grading and involution kind.
inline StarAlgebraSpec build_algebra(std::uint32_t n, const GradingSeq& grading, InvolutionKind kind) {
  if (n < 1) throw SpecError("matrix size must be >= 1");
  if (grading.size() != n)
    throw SpecError("grading length " + std::to_string(grading.size()) + " does not match n = " +
                    std::to_string(n));
  if (is_symplectic(kind) && n % 2 != 0)
    throw SpecError(to_string(kind) + " involution requires even n (got n = " + std::to_string(n) + ")");
  if (!grading.is_star_type())
    throw SpecError("grading " + grading.str() +
                    " is not of *-type: no superinvolution exists unless "
                    "g_1+g_n = g_2+g_{n-1} = ... = g_n+g_1 (mod 2)");

  StarAlgebraSpec spec;
  spec.n_ = n;
  spec.grading_ = grading;
  spec.kind_ = kind;
  spec.chain_ = detail::odd_chain_lengths(grading);

  const auto positions = ut_positions(n);
  auto j_sign = [&](std::uint32_t k) { return k <= n / 2 ? 1 : -1; };
  for (const auto& p : positions) {
    const Position q{n + 1 - p.col, n + 1 - p.row};
    int sign = 1;
    if (is_symplectic(kind)) sign *= j_sign(q.row) * j_sign(q.col);
    if (is_super(kind)) sign *= spec.phi_sign(p);
    spec.star_table_.push_back({q, sign});
  }

  std::vector<bool> seen(positions.size(), false);
  for (const auto& p : positions) {
    const auto ip = packed_index(n, p);
    if (seen[ip]) continue;
    const auto& img = spec.star_table_[ip];
    const auto iq = packed_index(n, img.pos);
    seen[ip] = seen[iq] = true;
    const std::uint8_t parity = grading.degree(p);
    if (img.pos == p) {
      const ComponentTag tag{parity, img.sign > 0 ? Symmetry::plus : Symmetry::minus};
      spec.components_[tag.index()].push_back({{{p, 1}}, p});
    } else {
      // (e_p + s e_q)* = e_p + s e_q, (e_p - s e_q)* = -(e_p - s e_q)
      const Position lo = std::min(p, img.pos);
      const Position hi = std::max(p, img.pos);
      const int s = spec.star_table_[packed_index(n, lo)].sign;
      spec.components_[ComponentTag{parity, Symmetry::plus}.index()].push_back(
          {{{lo, 1}, {hi, s}}, lo});
      spec.components_[ComponentTag{parity, Symmetry::minus}.index()].push_back(
          {{{lo, 1}, {hi, -s}}, lo});
    }
  }
  for (auto& c : spec.components_) std::sort(c.begin(), c.end(), detail::basis_order);
  return spec;
}

inline StarAlgebraSpec build_algebra(std::uint32_t n, std::string_view grading, std::string_view kind) {
  return build_algebra(n, GradingSeq::parse(grading), parse_involution_kind(kind));
}

/// Linear extension of the star table.
template <class T>
UpperMatrix<T> apply_star(const StarAlgebraSpec& spec, const UpperMatrix<T>& m) {
  if (m.size() != spec.n())
    throw ShapeError("apply_star: matrix is " + std::to_string(m.size()) + "x" +
                     std::to_string(m.size()) + " but the algebra is UT_" + std::to_string(spec.n()));
  UpperMatrix<T> out(spec.n());
  for (const auto& p : ut_positions(spec.n())) {
    const auto& img = spec.star(p);
    if (img.sign > 0)
      out.at(img.pos) += m.at(p);
    else
      out.at(img.pos) -= m.at(p);
  }
  return out;
}

/// Homogeneous degree of m, or nullopt if m mixes degrees. Zero has degree 0.
template <class T>
std::optional<std::uint8_t> homogeneous_degree(const StarAlgebraSpec& spec, const UpperMatrix<T>& m) {
  std::optional<std::uint8_t> deg;
  for (const auto& p : ut_positions(spec.n())) {
    bool zero;
    if constexpr (std::is_same_v<T, Poly>)
      zero = m.at(p).is_zero();
    else
      zero = is_zero(m.at(p));
    if (zero) continue;
    const auto d = spec.grading().degree(p);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg.value_or(0);
}

/// Coordinates of m over a component basis, or nullopt if m is outside its span.
template <class T>
std::optional<std::vector<T>> component_coordinates(const StarAlgebraSpec& spec,
                                                    const ComponentTag& tag,
                                                    const UpperMatrix<T>& m) {
  const auto& basis = spec.component(tag);
  std::vector<T> coords;
  UpperMatrix<T> rebuilt(spec.n());
  for (const auto& b : basis) {
    const T c = m.at(b.representative);
    for (const auto& u : b.units) {
      if (u.sign > 0)
        rebuilt.at(u.pos) += c;
      else
        rebuilt.at(u.pos) -= c;
    }
    coords.push_back(c);
  }
  if (!(rebuilt == m)) return std::nullopt;
  return coords;
}

} // namespace starpi
