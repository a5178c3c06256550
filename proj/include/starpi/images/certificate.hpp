#pragma once

#include "starpi/exactmath/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace starpi {

enum class CertificateKind { infeasible, witness };

inline std::string to_string(CertificateKind k) { return k == CertificateKind::infeasible ? "infeasible" : "witness"; }

inline CertificateKind parse_certificate_kind(std::string_view s) {
  if (s == "infeasible") return CertificateKind::infeasible;
  if (s == "witness") return CertificateKind::witness;
  throw Error("unknown certificate kind '" + std::string(s) + "'");
}

/// Membership certificate for target in f(A). The constraints are the entries
/// of f(generic) - target. An infeasible certificate carries the reduced
/// Groebner basis {1} and cofactors with sum_j cofactors[j] * constraints[j] = 1.
/// A witness certificate carries a parameter point where every constraint vanishes.
struct Certificate {
  CertificateKind kind = CertificateKind::infeasible;
  std::string polynomial;
  std::uint32_t n = 0;
  std::string grading;
  std::string involution;
  std::string target;
  std::vector<Poly> constraints;
  GroebnerBasis basis;
  std::vector<Poly> cofactors;
  std::map<ParamId, Scalar> point;

  bool operator==(const Certificate&) const = default;
};

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};

/// Re-checks a certificate with polynomial arithmetic alone.
inline CertificateCheck verify_certificate(const Certificate& c, const BuchbergerLimits& limits = {}) {
  if (c.constraints.empty()) return {false, "certificate has no constraints"};
  if (c.kind == CertificateKind::witness) {
    for (std::size_t j = 0; j < c.constraints.size(); ++j) {
      Scalar v;
      try {
        v = c.constraints[j].eval(c.point);
      } catch (const MissingAssignment& e) {
        return {false, e.what()};
      }
      if (!is_zero(v)) return {false, "constraint " + std::to_string(j) + " evaluates to " + v.get_str()};
    }
    return {true, "every constraint vanishes at the witness point"};
  }
  if (c.cofactors.size() != c.constraints.size())
    return {false, "expected " + std::to_string(c.constraints.size()) + " cofactors, found " +
                       std::to_string(c.cofactors.size())};
  Poly combo;
  for (std::size_t j = 0; j < c.constraints.size(); ++j) combo += c.cofactors[j] * c.constraints[j];
  if (!(combo == Poly(1))) return {false, "cofactor combination is not 1"};
  const auto gb = groebner_basis(c.constraints, limits);
  if (!gb.complete()) return {false, "Groebner recomputation incomplete: " + gb.reason};
  if (!(gb.basis == c.basis)) return {false, "recomputed Groebner basis differs from the stored one"};
  if (!ideal_contains_one(gb.basis)) return {false, "stored basis is not {1}"};
  return {true, "cofactor identity holds and the reduced basis is {1}"};
}

} // namespace starpi
