#pragma once

#include "starpi/freestar/word.hpp"
#include "starpi/staralg/elements.hpp"

#include <map>
#include <string>

namespace starpi {

class ComponentMismatch : public Error {
public:
  using Error::Error;
};

/// True iff m is homogeneous of degree tag.parity (or zero) and m* = +-m.
template <class T>
bool in_component(const StarAlgebraSpec& spec, const ComponentTag& tag, const UpperMatrix<T>& m) {
  if (m.size() != spec.n()) return false;
  for (const auto& p : ut_positions(spec.n())) {
    bool zero;
    if constexpr (std::is_same_v<T, Poly>)
      zero = m.at(p).is_zero();
    else
      zero = is_zero(m.at(p));
    if (!zero && spec.grading().degree(p) != tag.parity) return false;
  }
  const auto s = apply_star(spec, m);
  if (tag.symmetry == Symmetry::plus) return s == m;
  UpperMatrix<T> neg(spec.n());
  neg -= m;
  return s == neg;
}

template <class T>
void check_component(const StarAlgebraSpec& spec, const VarSymbol& v, const UpperMatrix<T>& m) {
  if (m.size() != spec.n())
    throw ShapeError("value of " + to_string(v) + " is " + std::to_string(m.size()) + "x" +
                     std::to_string(m.size()) + ", algebra is " + spec.id());
  if (!in_component(spec, v.component(), m))
    throw ComponentMismatch("value assigned to " + to_string(v) + " is not in component " +
                            to_string(v.component()) + " of " + spec.id());
}

template <class T>
using Assignment = std::map<VarSymbol, UpperMatrix<T>>;

/// f evaluated at the assignment. Every variable of f must be assigned a
/// matrix from its own component.
template <class T>
UpperMatrix<T> substitute(const StarPoly& f, const Assignment<T>& values, const StarAlgebraSpec& spec) {
  for (const auto& v : f.variables()) {
    const auto it = values.find(v);
    if (it == values.end()) throw Error("no value assigned to variable " + to_string(v));
    check_component(spec, v, it->second);
  }
  UpperMatrix<T> out(spec.n());
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      out += UpperMatrix<T>::identity(spec.n()).scale(c);
      continue;
    }
    UpperMatrix<T> prod = values.at(w.front());
    for (std::size_t k = 1; k < w.size(); ++k) prod = prod * values.at(w[k]);
    out += prod.scale(c);
  }
  return out;
}

inline PolyMatrix substitute(const StarPoly& f, const Assignment<Poly>& values,
                             const StarAlgebraSpec& spec) {
  return substitute<Poly>(f, values, spec);
}

/// Generic assignment: one fresh generic element per variable, slots given by
/// the ordinal of the variable in f.variables() (1-based).
inline Assignment<Poly> generic_assignment(const StarPoly& f, const StarAlgebraSpec& spec) {
  Assignment<Poly> out;
  std::uint32_t slot = 1;
  for (const auto& v : f.variables()) out.emplace(v, generic_element(spec, v.component(), slot++));
  return out;
}

} // namespace starpi
