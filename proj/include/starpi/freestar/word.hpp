#pragma once

#include "starpi/exactmath/scalar.hpp"
#include "starpi/staralg/algebra.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace starpi {

enum class Species : std::uint8_t { y, z }; // y even, z odd

/// Signed graded free variable y_i^+, y_i^-, z_i^+ or z_i^-.
struct VarSymbol {
  std::uint32_t index = 1;
  Species species = Species::y;
  Symmetry symmetry = Symmetry::plus;

  std::uint8_t parity() const { return species == Species::z ? 1 : 0; }
  ComponentTag component() const { return {parity(), symmetry}; }

  auto operator<=>(const VarSymbol&) const = default;
};

inline VarSymbol yp(std::uint32_t i) { return {i, Species::y, Symmetry::plus}; }
inline VarSymbol ym(std::uint32_t i) { return {i, Species::y, Symmetry::minus}; }
inline VarSymbol zp(std::uint32_t i) { return {i, Species::z, Symmetry::plus}; }
inline VarSymbol zm(std::uint32_t i) { return {i, Species::z, Symmetry::minus}; }

inline std::string to_string(const VarSymbol& v) {
  return std::string(v.species == Species::y ? "y" : "z") + std::to_string(v.index) +
         (v.symmetry == Symmetry::plus ? "+" : "-");
}

using Word = std::vector<VarSymbol>;

inline std::string to_string(const Word& w) {
  std::string s;
  for (const auto& v : w) {
    if (!s.empty()) s += " ";
    s += to_string(v);
  }
  return s;
}

inline bool is_multilinear(const Word& w) {
  std::set<VarSymbol> seen(w.begin(), w.end());
  return seen.size() == w.size();
}

/// Rational combination of words; canonical (sorted, no zero coefficients).
class StarPoly {
public:
  using TermMap = std::map<Word, Scalar>;

  StarPoly() = default;
  explicit StarPoly(Word w, const Scalar& c = 1) {
    if (!starpi::is_zero(c)) terms_.emplace(std::move(w), c);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c) {
    if (starpi::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (starpi::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Distinct variables, sorted.
  std::vector<VarSymbol> variables() const {
    std::set<VarSymbol> vs;
    for (const auto& [w, c] : terms_) vs.insert(w.begin(), w.end());
    return {vs.begin(), vs.end()};
  }

  /// Every word uses exactly the same letters, each once.
  bool is_multilinear() const {
    if (terms_.empty()) return true;
    auto letters = [](const Word& w) {
      Word s = w;
      std::sort(s.begin(), s.end());
      return s;
    };
    const Word first = letters(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
      if (!starpi::is_multilinear(w) || letters(w) != first) return false;
    return true;
  }

  StarPoly& operator+=(const StarPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  StarPoly& operator-=(const StarPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  StarPoly& operator*=(const Scalar& s) {
    if (starpi::is_zero(s)) terms_.clear();
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend StarPoly operator+(StarPoly a, const StarPoly& b) { return a += b; }
  friend StarPoly operator-(StarPoly a, const StarPoly& b) { return a -= b; }
  friend StarPoly operator*(const Scalar& s, StarPoly a) { return a *= s; }
  friend StarPoly operator*(const StarPoly& a, const StarPoly& b) {
    StarPoly out;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    return out;
  }

  bool operator==(const StarPoly&) const = default;

private:
  TermMap terms_;
};

inline StarPoly letter(const VarSymbol& v) { return StarPoly(Word{v}); }

inline StarPoly commutator(const StarPoly& a, const StarPoly& b) { return a * b - b * a; }

/// Left-normed [a1, a2, ..., ak] = [[a1, a2], ..., ak].
inline StarPoly commutator(const std::vector<StarPoly>& items) {
  if (items.empty()) throw Error("empty commutator");
  StarPoly acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = commutator(acc, items[i]);
  return acc;
}

inline StarPoly product(const std::vector<VarSymbol>& vars) { return StarPoly(Word(vars)); }

/// Canonical text in the polynomial grammar; parses back to the same value.
inline std::string to_string(const StarPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    const Scalar mag = abs(c);
    if (first)
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) s += mag.get_str() + " ";
    s += to_string(w);
  }
  return s;
}

/// (n1, n2, n3, n4): counts of even symmetric, odd symmetric, even skew and
/// odd skew variables. Variables are named positionally: 1..n1 are y+, the
/// next n2 are z+, then y-, then z-.
struct TypeSignature {
  std::array<std::uint32_t, 4> counts{};

  std::uint32_t degree() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  std::uint32_t odd_count() const { return counts[1] + counts[3]; }

  std::vector<VarSymbol> variables() const {
    std::vector<VarSymbol> out;
    std::uint32_t idx = 1;
    const std::array<std::pair<Species, Symmetry>, 4> kinds{{{Species::y, Symmetry::plus},
                                                             {Species::z, Symmetry::plus},
                                                             {Species::y, Symmetry::minus},
                                                             {Species::z, Symmetry::minus}}};
    for (std::size_t k = 0; k < 4; ++k)
      for (std::uint32_t c = 0; c < counts[k]; ++c) out.push_back({idx++, kinds[k].first, kinds[k].second});
    return out;
  }

  auto operator<=>(const TypeSignature&) const = default;
};

inline std::string to_string(const TypeSignature& s) {
  return "(" + std::to_string(s.counts[0]) + "," + std::to_string(s.counts[1]) + "," +
         std::to_string(s.counts[2]) + "," + std::to_string(s.counts[3]) + ")";
}

/// All n! multilinear words of the signature, in lexicographic order of the
/// permutation applied to the positional variable list.
inline std::vector<Word> enumerate_words(const TypeSignature& sig) {
  const auto n = sig.degree();
  if (n == 0) throw Error("enumerate_words: signature (0,0,0,0) has no variables");
  const auto vars = sig.variables();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Word> out;
  do {
    Word w;
    w.reserve(n);
    for (auto k : perm) w.push_back(vars[k]);
    out.push_back(std::move(w));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All signatures with n1+n2+n3+n4 = n, in lexicographic order.
inline std::vector<TypeSignature> signatures_of_degree(std::uint32_t n) {
  std::vector<TypeSignature> out;
  for (std::uint32_t a = 0; a <= n; ++a)
    for (std::uint32_t b = 0; a + b <= n; ++b)
      for (std::uint32_t c = 0; a + b + c <= n; ++c)
        out.push_back({{a, b, c, n - a - b - c}});
  return out;
}

} // namespace starpi
