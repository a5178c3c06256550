#pragma once

#include "starpi/exactmath/linalg.hpp"
#include "starpi/freestar/substitute.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace starpi {

/// n! / (k1! k2! k3! k4!)
inline BigInt multinomial(const TypeSignature& sig) {
  BigInt num;
  mpz_fac_ui(num.get_mpz_t(), sig.degree());
  for (auto k : sig.counts) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    num /= f;
  }
  return num;
}

namespace detail {

/// Column index over (position, monomial) pairs, filled as entries appear.
class ColumnIndex {
public:
  std::size_t operator()(const Position& p, const Monomial& m) {
    auto [it, inserted] = index_.try_emplace({p, m}, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

private:
  struct Less {
    bool operator()(const std::pair<Position, Monomial>& a, const std::pair<Position, Monomial>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return GrevlexLess{}(a.second, b.second);
    }
  };
  std::map<std::pair<Position, Monomial>, std::size_t, Less> index_;
};

/// Flattened coefficient rows of the given matrices over a shared column index.
inline ScalarRows flatten(const std::vector<PolyMatrix>& values, ColumnIndex& cols) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse;
  for (const auto& m : values) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    for (const auto& p : ut_positions(m.size()))
      for (const auto& [mono, c] : m.at(p).terms()) row.emplace_back(cols(p, mono), c);
    sparse.push_back(std::move(row));
  }
  ScalarRows rows(values.size(), ScalarVector(cols.size()));
  for (std::size_t r = 0; r < sparse.size(); ++r)
    for (const auto& [j, c] : sparse[r]) rows[r][j] = c;
  return rows;
}

} // namespace detail

/// Generic evaluations of all words of the signature, in enumeration order.
/// Consecutive words share prefixes, so prefix products are reused.
inline std::vector<PolyMatrix> evaluate_words(const StarAlgebraSpec& spec, const TypeSignature& sig) {
  const auto words = enumerate_words(sig);
  std::map<VarSymbol, PolyMatrix> generic;
  for (const auto& v : sig.variables()) generic.emplace(v, generic_element(spec, v.component(), v.index));
  std::vector<PolyMatrix> out;
  out.reserve(words.size());
  std::vector<PolyMatrix> prefix; // prefix[k] = product of the first k+1 letters
  const Word* prev = nullptr;
  for (const auto& w : words) {
    std::size_t keep = 0;
    if (prev)
      while (keep < w.size() && keep < prefix.size() && (*prev)[keep] == w[keep]) ++keep;
    prefix.resize(keep);
    for (std::size_t k = keep; k < w.size(); ++k)
      prefix.push_back(k == 0 ? generic.at(w[0]) : prefix.back() * generic.at(w[k]));
    out.push_back(prefix.back());
    prev = &w;
  }
  return out;
}

/// c_{n1,...,n4}: rank of the generic evaluation matrix of the signature's words.
inline std::size_t codim_type(const StarAlgebraSpec& spec, const TypeSignature& sig) {
  if (sig.degree() == 0) throw Error("codim_type: signature (0,0,0,0) has no variables");
  for (const auto& v : sig.variables())
    if (spec.component(v.component()).empty()) return 0;
  detail::ColumnIndex cols;
  return matrix_rank(detail::flatten(evaluate_words(spec, sig), cols));
}

struct CodimRow {
  TypeSignature signature;
  std::size_t codim = 0;
  BigInt multinomial;

  bool operator==(const CodimRow&) const = default;
};

struct CodimReport {
  std::string spec_id;
  std::uint32_t n = 0;
  std::vector<CodimRow> rows;
  BigInt total;
  std::optional<BigInt> closed_form;
  /// Partial sums grouped by the number of odd variables (0..3); only for UT4(0101, super-symplectic).
  std::optional<std::array<BigInt, 4>> case_sums;
  /// Sum over signatures with four or more odd variables.
  BigInt beyond_cases;

  bool operator==(const CodimReport&) const = default;
};

inline bool is_ut4_0101_supersymplectic(const StarAlgebraSpec& spec) {
  return spec.n() == 4 && spec.grading().str() == "0101" && spec.kind() == InvolutionKind::super_symplectic;
}

/// 2^k as an exact rational, k may be negative.
inline Scalar pow2(long k) {
  Scalar r = 1;
  if (k >= 0)
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  else
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  r.canonicalize();
  return r;
}

namespace detail {

inline BigInt integral(const Scalar& q, const char* what) {
  if (q.get_den() != 1) throw Error(std::string(what) + " is not an integer: " + q.get_str());
  return q.get_num();
}

} // namespace detail

/// 2^n(n+2) - 2^(n-2) n(n-1) + 2^(2n-1)(n^2-2) + 2^(2n-5) n(n-1)(n-2)
inline BigInt closed_form_codim_ut4(std::uint32_t n) {
  if (n < 1) throw Error("closed_form_codim_ut4: n must be >= 1");
  const long m = n;
  const Scalar v = pow2(m) * (m + 2) - pow2(m - 2) * m * (m - 1) + pow2(2 * m - 1) * (m * m - 2) +
                   pow2(2 * m - 5) * m * (m - 1) * (m - 2);
  return detail::integral(v, "closed form");
}

/// Case sums of the UT4(0101) count: no odd variables, one, two, three.
inline std::array<BigInt, 4> case_sums_ut4(std::uint32_t n) {
  if (n < 1) throw Error("case_sums_ut4: n must be >= 1");
  const long m = n;
  const Scalar s = pow2(m + 1) * (1 + pow2(m - 2) * (m - 2));
  const Scalar u = m * pow2(m) * (1 + (m - 1) * pow2(m - 2));
  const Scalar v = m * (m - 1) * pow2(m - 2) * (pow2(m) - 1);
  const Scalar z = m * (m - 1) * (m - 2) * pow2(2 * m - 5);
  return {detail::integral(s, "S(n)"), detail::integral(u, "U(n)"), detail::integral(v, "V(n)"),
          detail::integral(z, "Z(n)")};
}

/// Full codimension table for degree n and the multinomial-weighted total.
inline CodimReport codim_total(const StarAlgebraSpec& spec, std::uint32_t n) {
  if (n < 1) throw Error("codim_total: n must be >= 1");
  CodimReport r;
  r.spec_id = spec.id();
  r.n = n;
  r.total = 0;
  r.beyond_cases = 0;
  std::array<BigInt, 4> sums{0, 0, 0, 0};
  for (const auto& sig : signatures_of_degree(n)) {
    CodimRow row{sig, codim_type(spec, sig), multinomial(sig)};
    const BigInt weighted = row.multinomial * static_cast<unsigned long>(row.codim);
    r.total += weighted;
    if (sig.odd_count() < 4)
      sums[sig.odd_count()] += weighted;
    else
      r.beyond_cases += weighted;
    r.rows.push_back(std::move(row));
  }
  if (is_ut4_0101_supersymplectic(spec)) {
    r.closed_form = closed_form_codim_ut4(n);
    r.case_sums = sums;
  }
  return r;
}

class OutsideSpan : public Error {
public:
  using Error::Error;
};

/// Coefficients of f in the basis, modulo the identities of the algebra.
inline ScalarVector canonical_coefficients(const StarPoly& f, const std::vector<StarPoly>& basis,
                                           const StarAlgebraSpec& spec) {
  if (basis.empty()) throw Error("canonical_coefficients: empty basis");
  // Shared generic values so every element is evaluated at the same point.
  std::map<VarSymbol, PolyMatrix> generic;
  {
    std::set<VarSymbol> vs;
    for (const auto& v : f.variables()) vs.insert(v);
    for (const auto& b : basis)
      for (const auto& v : b.variables()) vs.insert(v);
    std::uint32_t slot = 1;
    for (const auto& v : vs) generic.emplace(v, generic_element(spec, v.component(), slot++));
  }
  auto eval = [&](const StarPoly& p) {
    Assignment<Poly> a;
    for (const auto& v : p.variables()) a.emplace(v, generic.at(v));
    return substitute(p, a, spec);
  };
  std::vector<PolyMatrix> values;
  for (const auto& b : basis) values.push_back(eval(b));
  values.push_back(eval(f));
  detail::ColumnIndex cols;
  ScalarRows rows = detail::flatten(values, cols);
  const ScalarVector target = rows.back();
  rows.pop_back();
  if (matrix_rank(rows) != basis.size())
    throw Error("canonical_coefficients: basis is linearly dependent modulo the identities of " + spec.id());
  auto x = linear_solve(transpose(rows), target);
  if (!x) throw OutsideSpan("polynomial " + to_string(f) + " is outside the basis span modulo the identities of " + spec.id());
  return *x;
}

} // namespace starpi
