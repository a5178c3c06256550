#pragma once

#include "starpi/exactmath/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace starpi {

/// Reduced Groebner basis under grevlex (ParamId ranking), sorted by
/// ascending leading monomial; every generator is monic.
struct GroebnerBasis {
  std::vector<Poly> generators;
  std::string order = "grevlex";

  bool operator==(const GroebnerBasis&) const = default;
};

/// Resource caps for Buchberger. Exceeding either one yields an incomplete
/// result, never a wrong basis.
struct BuchbergerLimits {
  std::size_t max_pairs = 50000;
  std::size_t max_support = 20000;
};

enum class GroebnerStatus { complete, incomplete };

struct GroebnerResult {
  GroebnerStatus status = GroebnerStatus::complete;
  GroebnerBasis basis;
  /// cofactors[i][j]: basis.generators[i] == sum_j cofactors[i][j] * input[j].
  std::vector<std::vector<Poly>> cofactors;
  std::string reason;
  std::size_t pairs_processed = 0;

  bool complete() const { return status == GroebnerStatus::complete; }
};

/// Remainder of p under full reduction by `divisors` (any order of divisors
/// is accepted; the remainder is unique when they form a Groebner basis).
inline Poly normal_form(Poly p, const std::vector<Poly>& divisors) {
  Poly remainder;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Scalar lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
      p.add_scaled(g, g.leading_monomial().quotient_of(lm), -lc / g.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

namespace detail {

struct TrackedPoly {
  Poly poly;
  std::vector<Poly> cof;
};

inline void make_monic(TrackedPoly& t) {
  const Scalar inv = 1 / t.poly.leading_coefficient();
  t.poly *= inv;
  for (auto& c : t.cof) c *= inv;
}

/// Full reduction with cofactor bookkeeping. Returns false if the support
/// cap was hit.
inline bool reduce_tracked(TrackedPoly& p, const std::vector<TrackedPoly>& basis,
                           std::size_t skip, std::size_t max_support) {
  TrackedPoly rem{Poly{}, std::vector<Poly>(p.cof.size())};
  while (!p.poly.is_zero()) {
    if (p.poly.size() > max_support) return false;
    const Monomial lm = p.poly.leading_monomial();
    const Scalar lc = p.poly.leading_coefficient();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const auto& g = basis[k];
      if (g.poly.is_zero() || !g.poly.leading_monomial().divides(lm)) continue;
      const Monomial q = g.poly.leading_monomial().quotient_of(lm);
      const Scalar c = -lc / g.poly.leading_coefficient();
      p.poly.add_scaled(g.poly, q, c);
      for (std::size_t j = 0; j < p.cof.size(); ++j) p.cof[j].add_scaled(g.cof[j], q, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.poly.add_term(lm, lc);
      p.poly.add_term(lm, -lc);
    }
  }
  p.poly = std::move(rem.poly);
  return true;
}

} // namespace detail

/// Buchberger's algorithm with the coprime-leading-monomial criterion,
/// normal pair selection and cofactor tracking.
inline GroebnerResult groebner_basis(const std::vector<Poly>& gens,
                                     const BuchbergerLimits& limits = {}) {
  if (gens.empty()) throw Error("groebner_basis: empty generator list");
  const auto inputs = gens.size();
  GroebnerResult result;
  std::vector<detail::TrackedPoly> basis;

  auto unit = [&](std::size_t j) {
    std::vector<Poly> cof(inputs);
    cof[j] = Poly(1);
    return cof;
  };
  auto finish_with_one = [&](detail::TrackedPoly t) {
    detail::make_monic(t);
    result.basis.generators = {t.poly};
    result.cofactors = {t.cof};
    return result;
  };

  for (std::size_t j = 0; j < inputs; ++j) {
    if (gens[j].is_zero()) continue;
    detail::TrackedPoly t{gens[j], unit(j)};
    if (t.poly.is_constant()) return finish_with_one(std::move(t));
    detail::make_monic(t);
    basis.push_back(std::move(t));
  }
  if (basis.empty()) return result; // zero ideal

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  auto pair_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return Monomial::lcm(basis[pr.first].poly.leading_monomial(),
                         basis[pr.second].poly.leading_monomial())
        .degree();
  };

  while (!pairs.empty()) {
    if (result.pairs_processed >= limits.max_pairs) {
      result.status = GroebnerStatus::incomplete;
      result.reason = "pair limit " + std::to_string(limits.max_pairs) + " exceeded";
      return result;
    }
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      const auto da = pair_degree(a);
      const auto db = pair_degree(b);
      return da != db ? da < db : a < b;
    });
    const auto [i, j] = *best;
    pairs.erase(best);
    ++result.pairs_processed;

    const auto& gi = basis[i];
    const auto& gj = basis[j];
    const Monomial& li = gi.poly.leading_monomial();
    const Monomial& lj = gj.poly.leading_monomial();
    if (li.coprime(lj)) continue;
    const Monomial l = Monomial::lcm(li, lj);
    const Monomial qi = li.quotient_of(l);
    const Monomial qj = lj.quotient_of(l);

    detail::TrackedPoly s{Poly{}, std::vector<Poly>(inputs)};
    s.poly.add_scaled(gi.poly, qi, Scalar(1));
    s.poly.add_scaled(gj.poly, qj, Scalar(-1));
    for (std::size_t k = 0; k < inputs; ++k) {
      s.cof[k].add_scaled(gi.cof[k], qi, Scalar(1));
      s.cof[k].add_scaled(gj.cof[k], qj, Scalar(-1));
    }
    if (!detail::reduce_tracked(s, basis, basis.size(), limits.max_support)) {
      result.status = GroebnerStatus::incomplete;
      result.reason = "support limit " + std::to_string(limits.max_support) + " exceeded";
      return result;
    }
    if (s.poly.is_zero()) continue;
    if (s.poly.is_constant()) return finish_with_one(std::move(s));
    detail::make_monic(s);
    basis.push_back(std::move(s));
    const auto n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<detail::TrackedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].poly.leading_monomial();
      const auto& lj = basis[j].poly.leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (!detail::reduce_tracked(minimal[i], minimal, i, limits.max_support)) {
      result.status = GroebnerStatus::incomplete;
      result.reason = "support limit exceeded during interreduction";
      return result;
    }
    detail::make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return GrevlexLess{}(a.poly.leading_monomial(), b.poly.leading_monomial());
  });
  for (auto& t : minimal) {
    result.basis.generators.push_back(std::move(t.poly));
    result.cofactors.push_back(std::move(t.cof));
  }
  return result;
}

/// True iff the reduced basis is exactly {1}.
inline bool ideal_contains_one(const GroebnerBasis& basis) {
  return basis.generators.size() == 1 && basis.generators.front() == Poly(1);
}

} // namespace starpi
