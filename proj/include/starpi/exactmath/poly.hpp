#pragma once

#include "starpi/exactmath/scalar.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace starpi {

/// Commuting parameter xi_{row,col}^{(slot)} attached to an upper-triangular
/// position. Ordered by (row, col, slot); that order fixes the variable
/// ranking of every monomial order below.
struct ParamId {
  std::uint32_t row = 1;
  std::uint32_t col = 1;
  std::uint32_t slot = 1;

  auto operator<=>(const ParamId&) const = default;
};

inline std::string to_string(const ParamId& p) {
  return "xi" + std::to_string(p.row) + "_" + std::to_string(p.col) + "^" +
         std::to_string(p.slot);
}

class MissingAssignment : public Error {
public:
  explicit MissingAssignment(const ParamId& p)
      : Error("no value assigned to parameter " + to_string(p)), param(p) {}
  ParamId param;
};

/// Power product of parameters, stored sparse and sorted by ParamId.
class Monomial {
public:
  using Factor = std::pair<ParamId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(ParamId p, std::uint32_t e = 1) {
    if (e > 0) factors_.emplace_back(p, e);
  }
  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
      if (f.second == 0) continue;
      if (!merged.empty() && merged.back().first == f.first)
        merged.back().second += f.second;
      else
        merged.push_back(f);
    }
    factors_ = std::move(merged);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  std::uint32_t exponent(const ParamId& p) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                               [](const Factor& f, const ParamId& q) { return f.first < q; });
    return (it != factors_.end() && it->first == p) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  bool divides(const Monomial& m) const {
    for (const auto& f : factors_)
      if (m.exponent(f.first) < f.second) return false;
    return true;
  }

  /// m / *this, requires divides(m).
  Monomial quotient_of(const Monomial& m) const {
    std::vector<Factor> out;
    for (const auto& f : m.factors_) {
      const auto e = f.second - exponent(f.first);
      if (e > 0) out.emplace_back(f.first, e);
    }
    Monomial q;
    q.factors_ = std::move(out);
    return q;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<Factor> out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.push_back(*j++);
      } else {
        out.emplace_back(i->first, std::max(i->second, j->second));
        ++i;
        ++j;
      }
    }
    Monomial m;
    m.factors_ = std::move(out);
    return m;
  }

  bool coprime(const Monomial& other) const {
    for (const auto& f : factors_)
      if (other.exponent(f.first) > 0) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

private:
  std::vector<Factor> factors_;
};

/// Graded reverse lexicographic order. Variables are ranked by ParamId:
/// the smallest ParamId is the largest variable.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.rbegin();
    auto j = fb.rbegin();
    while (i != fa.rend() && j != fb.rend()) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
      } else if (j->first < i->first) {
        // a carries the smaller variable, b does not: a is smaller.
        return true;
      } else {
        return false;
      }
    }
    // equal degree forces both ranges to be exhausted together
    return false;
  }
};

/// Sparse multivariate polynomial over the rationals in ParamId parameters.
/// Terms are kept in grevlex order with no zero coefficients, so equality is
/// structural and the zero polynomial is the empty term map.
class Poly {
public:
  using TermMap = std::map<Monomial, Scalar, GrevlexLess>;

  Poly() = default;
  Poly(const Scalar& c) { // NOLINT(google-explicit-constructor)
    if (!starpi::is_zero(c)) terms_.emplace(Monomial{}, c);
  }
  Poly(long c) : Poly(Scalar(c)) {} // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Scalar& c) {
    if (!starpi::is_zero(c)) terms_.emplace(m, c);
  }

  static Poly variable(const ParamId& p) { return Poly(Monomial(p), Scalar(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Scalar constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Leading term under grevlex; requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }

  std::uint32_t total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
  }

  std::vector<ParamId> parameters() const {
    std::vector<ParamId> out;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors()) out.push_back(f.first);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (starpi::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (starpi::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    if (starpi::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  /// this += c * m * p, the workhorse of reduction.
  void add_scaled(const Poly& p, const Monomial& m, const Scalar& c) {
    if (starpi::is_zero(c)) return;
    for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Exact evaluation; every occurring parameter must be assigned.
  Scalar eval(const std::function<std::optional<Scalar>(const ParamId&)>& value) const {
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (const auto& [p, e] : m.factors()) {
        auto v = value(p);
        if (!v) throw MissingAssignment(p);
        Scalar power = 1;
        for (std::uint32_t k = 0; k < e; ++k) power *= *v;
        t *= power;
      }
      total += t;
    }
    return total;
  }

  Scalar eval(const std::map<ParamId, Scalar>& assignment) const {
    return eval([&](const ParamId& p) -> std::optional<Scalar> {
      auto it = assignment.find(p);
      if (it == assignment.end()) return std::nullopt;
      return it->second;
    });
  }

  /// Partial substitution: assigned parameters are replaced by their values.
  Poly specialize(const std::map<ParamId, Scalar>& assignment) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      std::vector<Monomial::Factor> rest;
      for (const auto& [p, e] : m.factors()) {
        auto it = assignment.find(p);
        if (it == assignment.end()) {
          rest.emplace_back(p, e);
        } else {
          for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
        }
      }
      out.add_term(Monomial(std::move(rest)), t);
    }
    return out;
  }

private:
  TermMap terms_;
};

inline std::string to_string(const Monomial& m) {
  std::string s;
  for (const auto& [p, e] : m.factors()) {
    if (!s.empty()) s += "*";
    s += to_string(p);
    if (e > 1) s += "**" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

/// Human-readable form, highest term first.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += to_string(m);
    }
  }
  return s;
}

} // namespace starpi
