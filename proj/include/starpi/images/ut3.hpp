#pragma once

#include "starpi/images/probe.hpp"
#include "starpi/pi/codim.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace starpi {

inline StarAlgebraSpec ut3_super_reflection() { return build_algebra(3, "010", "super-reflection"); }

enum class Ut3Kind { zero, span_e13, A0plus, A0minus, D_k, J_k, A1, line_in_A1, span_e13_from_z1z2 };

struct Ut3ImageClass {
  Ut3Kind kind = Ut3Kind::zero;
  /// Number of skew even letters (D_k, J_k).
  std::uint32_t k = 0;
  /// Direction alpha e12 + beta e23 of line_in_A1, first nonzero entry 1.
  Scalar line_alpha, line_beta;
  /// Coefficient of the ordered product, then alpha_{l+2}..alpha_m.
  std::vector<Scalar> alphas;
  /// beta_{l+1}..beta_m when k >= 2.
  std::vector<Scalar> betas;

  bool operator==(const Ut3ImageClass&) const = default;

  std::string label() const {
    switch (kind) {
    case Ut3Kind::zero: return "zero";
    case Ut3Kind::span_e13: return "span_e13";
    case Ut3Kind::A0plus: return "A0plus";
    case Ut3Kind::A0minus: return "A0minus";
    case Ut3Kind::D_k: return "D_" + std::to_string(k);
    case Ut3Kind::J_k: return "J_" + std::to_string(k);
    case Ut3Kind::A1: return "A1";
    case Ut3Kind::line_in_A1: return "line-in-A1(" + line_alpha.get_str() + ":" + line_beta.get_str() + ")";
    default: return "span_e13-from-z1z2";
    }
  }

  /// Basis of the subspace the image equals.
  std::vector<RatMatrix> basis() const {
    auto e = [](std::uint32_t i, std::uint32_t j) { return RatMatrix::unit(3, {i, j}); };
    const Scalar sign = k % 2 == 0 ? 1 : -1;
    switch (kind) {
    case Ut3Kind::zero: return {};
    case Ut3Kind::span_e13:
    case Ut3Kind::span_e13_from_z1z2: return {e(1, 3)};
    case Ut3Kind::A0plus: return {e(1, 1) + e(3, 3), e(2, 2)};
    case Ut3Kind::A0minus: return {e(1, 1) - e(3, 3), e(1, 3)};
    case Ut3Kind::D_k: return {e(1, 1) + sign * e(3, 3)};
    case Ut3Kind::J_k: return {e(1, 1) + sign * e(3, 3), e(1, 3)};
    case Ut3Kind::A1: return {e(1, 2), e(2, 3)};
    default: return {line_alpha * e(1, 2) + line_beta * e(2, 3)};
    }
  }
};

struct Ut3CanonicalBasis {
  std::vector<VarSymbol> symmetric, skew;
  std::vector<StarPoly> elements;
};

/// {y+...y+ y-...y-} followed by y+...y+ [y_i-, y_{l+1}-, ..., (no y_i-), ..., y_m-]
/// for i = l+2..m, using the letters of f in index order.
inline Ut3CanonicalBasis ut3_canonical_basis(const std::vector<VarSymbol>& vars) {
  Ut3CanonicalBasis b;
  for (const auto& v : vars) (v.symmetry == Symmetry::plus ? b.symmetric : b.skew).push_back(v);
  auto by_index = [](const VarSymbol& a, const VarSymbol& c) { return a.index < c.index; };
  std::sort(b.symmetric.begin(), b.symmetric.end(), by_index);
  std::sort(b.skew.begin(), b.skew.end(), by_index);
  const StarPoly head = b.symmetric.empty() ? StarPoly(Word{}) : product(b.symmetric);
  std::vector<VarSymbol> all = b.symmetric;
  all.insert(all.end(), b.skew.begin(), b.skew.end());
  b.elements.push_back(product(all));
  for (std::size_t i = 1; i < b.skew.size(); ++i) {
    std::vector<StarPoly> items{letter(b.skew[i])};
    for (std::size_t j = 0; j < b.skew.size(); ++j)
      if (j != i) items.push_back(letter(b.skew[j]));
    b.elements.push_back(head * commutator(items));
  }
  return b;
}

/// Image of an even-variable multilinear f on UT3(010, super-reflection).
inline Ut3ImageClass classify_image_ut3(const StarPoly& f) {
  const auto vars = f.variables();
  for (const auto& v : vars)
    if (v.species == Species::z)
      throw NotApplicable("classify_image_ut3 takes even variables only; " + to_string(v) +
                          " is odd, use classify_image_ut3_odd");
  require_multilinear(f, "classify_image_ut3");
  Ut3ImageClass c;
  if (f.is_zero()) return c;
  const auto spec = ut3_super_reflection();
  const auto basis = ut3_canonical_basis(vars);
  ScalarVector coeffs;
  try {
    coeffs = canonical_coefficients(f, basis.elements, spec);
  } catch (const OutsideSpan& e) {
    throw OutsideSpan(std::string("classify_image_ut3: ") + e.what());
  }
  c.alphas = coeffs;
  const std::uint32_t k = static_cast<std::uint32_t>(basis.skew.size());
  const Scalar& alpha = coeffs[0];
  if (is_zero(alpha)) {
    const bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return is_zero(s); });
    c.kind = all_zero ? Ut3Kind::zero : Ut3Kind::span_e13;
    return c;
  }
  if (k == 0) {
    c.kind = Ut3Kind::A0plus;
    return c;
  }
  if (k == 1) {
    c.kind = Ut3Kind::A0minus;
    return c;
  }
  c.k = k;
  auto sgn = [](long e) { return Scalar(e % 2 == 0 ? 1 : -1); };
  const Scalar p = pow2(k - 1);
  Scalar b1 = sgn(k + 1) * alpha;
  for (std::uint32_t i = 2; i <= k; ++i) b1 += coeffs[i - 1] * p * sgn(k);
  c.betas.push_back(b1);
  for (std::uint32_t i = 2; i <= k; ++i) c.betas.push_back(sgn(k + i) * alpha - sgn(k) * p * coeffs[i - 1]);
  const bool all_zero = std::all_of(c.betas.begin(), c.betas.end(), [](const Scalar& s) { return is_zero(s); });
  c.kind = all_zero ? Ut3Kind::D_k : Ut3Kind::J_k;
  return c;
}

/// Image of f on UT3(010, super-reflection) when f has at least one odd variable.
inline Ut3ImageClass classify_image_ut3_odd(const StarPoly& f) {
  const auto vars = f.variables();
  const auto odd = std::count_if(vars.begin(), vars.end(), [](const VarSymbol& v) { return v.species == Species::z; });
  if (odd == 0) throw NotApplicable("classify_image_ut3_odd needs an odd variable; use classify_image_ut3");
  require_multilinear(f, "classify_image_ut3_odd");
  Ut3ImageClass c;
  if (f.is_zero()) return c;
  const auto spec = ut3_super_reflection();
  const PolyMatrix v = substitute(f, generic_assignment(f, spec), spec);
  if (v.is_zero()) return c;
  const auto outside = [&](const std::vector<Position>& allowed) {
    for (const auto& p : ut_positions(3))
      if (!v.at(p).is_zero() && std::find(allowed.begin(), allowed.end(), p) == allowed.end()) return true;
    return false;
  };
  if (odd >= 2) {
    if (outside({{1, 3}})) throw Error("classify_image_ut3_odd: evaluation leaves span{e13}");
    c.kind = Ut3Kind::span_e13_from_z1z2;
    return c;
  }
  if (outside({{1, 2}, {2, 3}})) throw Error("classify_image_ut3_odd: evaluation leaves A1");
  detail::ColumnIndex cols;
  std::vector<PolyMatrix> entries(2, PolyMatrix(1));
  entries[0].at({1, 1}) = v.at({1, 2});
  entries[1].at({1, 1}) = v.at({2, 3});
  const auto rows = detail::flatten(entries, cols);
  const auto rank = matrix_rank(rows);
  if (rank == 2) {
    c.kind = Ut3Kind::A1;
    return c;
  }
  c.kind = Ut3Kind::line_in_A1;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (!is_zero(rows[0][j]) || !is_zero(rows[1][j])) {
      if (!is_zero(rows[0][j])) {
        c.line_alpha = 1;
        c.line_beta = rows[1][j] / rows[0][j];
      } else {
        c.line_alpha = 0;
        c.line_beta = 1;
      }
      break;
    }
  return c;
}

/// Classification for any multilinear f on UT3(010, super-reflection).
inline Ut3ImageClass classify_image_ut3_any(const StarPoly& f) {
  for (const auto& v : f.variables())
    if (v.species == Species::z) return classify_image_ut3_odd(f);
  return classify_image_ut3(f);
}

struct Ut3Validation {
  std::size_t samples = 0;
  std::size_t outside = 0;
  std::optional<RatMatrix> first_outside;
  /// One witness per basis vector of the class, if found.
  std::vector<std::optional<Assignment<Scalar>>> witnesses;

  bool consistent() const {
    return outside == 0 && std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.has_value(); });
  }
};

inline bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& m) {
  if (basis.empty()) return m.is_zero();
  ScalarRows cols;
  for (const auto& b : basis) cols.push_back(flatten_matrix(b));
  return linear_solve(transpose(cols), flatten_matrix(m)).has_value();
}

/// Samples f and checks every value lies in the class subspace, then finds a
/// witness for each basis vector of the class.
inline Ut3Validation validate_ut3_class(const StarPoly& f, const Ut3ImageClass& c, std::size_t samples,
                                        std::uint64_t seed, std::size_t search_trials = 512) {
  const auto spec = ut3_super_reflection();
  const auto basis = c.basis();
  Ut3Validation v;
  v.samples = samples;
  for (const auto& s : sample_image(f, spec, samples, seed))
    if (!in_span(basis, s)) {
      ++v.outside;
      if (!v.first_outside) v.first_outside = s;
    }
  for (std::size_t i = 0; i < basis.size(); ++i)
    v.witnesses.push_back(membership_search(f, spec, basis[i], search_trials, seed + 1 + i));
  return v;
}

struct LemmaCheck {
  std::string lemma;
  std::uint32_t l = 0, k = 0, i = 0;
  bool passed = false;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
  }
};

/// Checks the closed forms for products of generic symmetric letters,
/// left-normed commutators of skew letters and products of skew letters on
/// UT3(010, super-reflection), with y+_t = xi11(e11+e33) + xi22 e22 and
/// y-_t = xi11(e11-e33) + xi13 e13 in slot t.
inline LemmaReport verify_structure_lemmas(std::uint32_t l_max, std::uint32_t k_max) {
  if (l_max < 1 || k_max < 1) throw Error("verify_structure_lemmas: bounds must be >= 1");
  const auto spec = ut3_super_reflection();
  const ComponentTag plus{0, Symmetry::plus}, minus{0, Symmetry::minus};
  auto xi = [](std::uint32_t r, std::uint32_t c, std::uint32_t t) { return Poly::variable({r, c, t}); };
  auto assign = [&](const StarPoly& f) {
    Assignment<Poly> a;
    for (const auto& v : f.variables())
      a.emplace(v, generic_element(spec, v.symmetry == Symmetry::plus ? plus : minus, v.index));
    return substitute(f, a, spec);
  };
  auto sgn = [](long e) { return Scalar(e % 2 == 0 ? 1 : -1); };
  LemmaReport r;

  for (std::uint32_t l = 1; l <= l_max; ++l) {
    std::vector<VarSymbol> ys;
    Poly p11(1), p22(1);
    for (std::uint32_t t = 1; t <= l; ++t) {
      ys.push_back(yp(t));
      p11 *= xi(1, 1, t);
      p22 *= xi(2, 2, t);
    }
    PolyMatrix expected(3);
    expected.at({1, 1}) = p11;
    expected.at({2, 2}) = p22;
    expected.at({3, 3}) = p11;
    r.checks.push_back({"symmetric-product", l, 0, 0, assign(product(ys)) == expected});
  }

  for (std::uint32_t l = 0; l <= l_max; ++l)
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      const std::uint32_t m = l + k;
      for (std::uint32_t i = l + 2; k >= 2 && i <= m; ++i) {
        std::vector<StarPoly> items{letter(ym(i))};
        for (std::uint32_t t = l + 1; t <= m; ++t)
          if (t != i) items.push_back(letter(ym(t)));
        Poly rest(1);
        for (std::uint32_t t = l + 2; t <= m; ++t)
          if (t != i) rest *= xi(1, 1, t);
        PolyMatrix expected(3);
        expected.at({1, 3}) = Poly(sgn(k) * pow2(k - 1)) *
                              (xi(1, 1, i) * xi(1, 3, l + 1) - xi(1, 3, i) * xi(1, 1, l + 1)) * rest;
        r.checks.push_back({"skew-commutator", l, k, i, assign(commutator(items)) == expected});
      }

      std::vector<VarSymbol> ys;
      Poly all11(1), corner;
      for (std::uint32_t t = l + 1; t <= m; ++t) {
        ys.push_back(ym(t));
        all11 *= xi(1, 1, t);
      }
      for (std::uint32_t i = 1; i <= k; ++i) {
        Poly term(sgn(k + i));
        for (std::uint32_t t = l + 1; t <= m; ++t) term *= t == l + i ? xi(1, 3, t) : xi(1, 1, t);
        corner += term;
      }
      PolyMatrix expected(3);
      expected.at({1, 1}) = all11;
      expected.at({1, 3}) = corner;
      expected.at({3, 3}) = Poly(sgn(k)) * all11;
      r.checks.push_back({"skew-product", l, k, 0, assign(product(ys)) == expected});
    }
  return r;
}

struct Ut3CatalogEntry {
  std::string poly;
  std::string expected;
};

/// Even-variable polynomials covering every branch of classify_image_ut3.
inline std::vector<Ut3CatalogEntry> ut3_classification_catalog() {
  return {
      {"y1+", "A0plus"},
      {"y1+ y2+ y3+", "A0plus"},
      {"y1+ y2+ - 3 y2+ y1+", "A0plus"},
      {"y1-", "A0minus"},
      {"y1+ y2-", "A0minus"},
      {"y2- y1+ y3+", "A0minus"},
      {"[y2-,y1-]", "span_e13"},
      {"y1+ [y3-,y2-,y4-]", "span_e13"},
      {"y1- y2- y3- - y3- y2- y1-", "zero"},
      {"2 y1- y2- + [y2-,y1-]", "D_2"},
      {"y1+ y2- y3- + y1+ y3- y2-", "D_2"},
      {"8 y1- y2- y3- y4- + [y2-,y1-,y3-,y4-] - [y3-,y1-,y2-,y4-] + [y4-,y1-,y2-,y3-]", "D_4"},
      {"y1- y2-", "J_2"},
      {"y1- y2- y3-", "J_3"},
      {"[y2-,y1-,y3-] - 4 y1- y2- y3-", "J_3"},
      {"y1+ y2- y3- y4- y5-", "J_4"},
  };
}

} // namespace starpi
