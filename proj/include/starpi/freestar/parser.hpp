#pragma once

#include "starpi/freestar/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starpi {

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

/// A variable as written: letter y, z or x, index, optional sign.
struct SyntaxVar {
  char letter = 'y';
  std::uint32_t index = 1;
  std::optional<Symmetry> sign;

  bool operator==(const SyntaxVar&) const = default;
};

/// A plain variable (one item) or a left-normed commutator (two or more).
struct SyntaxFactor {
  bool bracket = false;
  std::vector<SyntaxVar> items;

  bool operator==(const SyntaxFactor&) const = default;
};

struct SyntaxTerm {
  Scalar coeff = 1;
  std::vector<SyntaxFactor> factors;

  bool operator==(const SyntaxTerm&) const = default;
};

/// Polynomial as written, before commutator expansion.
struct SyntaxPoly {
  std::vector<SyntaxTerm> terms;

  bool has_unsigned() const {
    for (const auto& t : terms)
      for (const auto& f : t.factors)
        for (const auto& v : f.items)
          if (!v.sign) return true;
    return false;
  }
};

inline std::string to_string(const SyntaxVar& v) {
  std::string s(1, v.letter);
  s += std::to_string(v.index);
  if (v.sign) s += *v.sign == Symmetry::plus ? "+" : "-";
  return s;
}

inline std::string to_string(const SyntaxPoly& p) {
  if (p.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms) {
    const Scalar mag = abs(t.coeff);
    if (first)
      s += sgn(t.coeff) < 0 ? "-" : "";
    else
      s += sgn(t.coeff) < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) s += mag.get_str() + " ";
    bool first_factor = true;
    for (const auto& f : t.factors) {
      if (!first_factor) s += " ";
      first_factor = false;
      if (f.bracket) {
        s += "[";
        for (std::size_t k = 0; k < f.items.size(); ++k) s += (k ? "," : "") + to_string(f.items[k]);
        s += "]";
      } else {
        s += to_string(f.items.front());
      }
    }
  }
  return s;
}

namespace detail {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SyntaxPoly parse() {
    SyntaxPoly out;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == text_.size()) return out;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      SyntaxTerm t = term();
      t.coeff *= sign;
      out.terms.push_back(std::move(t));
    }
    if (out.terms.empty()) fail("empty polynomial");
    return out;
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  SyntaxTerm term() {
    SyntaxTerm t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      try {
        t.coeff = parse_scalar(text_.substr(start, pos_ - start));
      } catch (const Error&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      skip();
    }
    while (true) {
      skip();
      const char c = peek();
      if (c == '[') {
        ++pos_;
        SyntaxFactor f{true, {}};
        while (true) {
          skip();
          f.items.push_back(variable());
          skip();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          if (peek() == ']') {
            ++pos_;
            break;
          }
          fail("expected ',' or ']' in commutator");
        }
        if (f.items.size() < 2) fail("commutator needs at least two entries");
        t.factors.push_back(std::move(f));
      } else if (c == 'y' || c == 'z' || c == 'x') {
        t.factors.push_back({false, {variable()}});
      } else {
        break;
      }
    }
    if (t.factors.empty()) fail("expected a variable or '['");
    return t;
  }

  SyntaxVar variable() {
    SyntaxVar v;
    const char c = peek();
    if (c != 'y' && c != 'z' && c != 'x') fail("expected variable 'y', 'z' or 'x'");
    v.letter = c;
    ++pos_;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected variable index");
    const auto idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (idx == 0) fail("variable index must be positive");
    v.index = static_cast<std::uint32_t>(idx);
    // A sign directly after the digits is a suffix; "y1 - y2" is a difference.
    if (peek() == '+' || peek() == '-') {
      v.sign = peek() == '+' ? Symmetry::plus : Symmetry::minus;
      ++pos_;
    }
    if (v.letter == 'x' && v.sign) fail("'x' variables are unsigned schema letters");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline SyntaxPoly parse_syntax(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Concrete choice for each unsigned schema variable, keyed by (letter, index).
using SchemaChoice = std::map<std::pair<char, std::uint32_t>, VarSymbol>;

/// Distinct unsigned schema variables in order of first appearance.
inline std::vector<std::pair<char, std::uint32_t>> schema_variables(const SyntaxPoly& p) {
  std::vector<std::pair<char, std::uint32_t>> out;
  for (const auto& t : p.terms)
    for (const auto& f : t.factors)
      for (const auto& v : f.items)
        if (!v.sign && std::find(out.begin(), out.end(), std::pair{v.letter, v.index}) == out.end())
          out.emplace_back(v.letter, v.index);
  return out;
}

inline StarPoly expand(const SyntaxPoly& p, const SchemaChoice& choice = {}) {
  auto resolve = [&](const SyntaxVar& v) -> VarSymbol {
    if (v.sign) return {v.index, v.letter == 'z' ? Species::z : Species::y, *v.sign};
    const auto it = choice.find({v.letter, v.index});
    if (it == choice.end())
      throw Error("unsigned variable " + to_string(v) + " is only allowed in catalog mode");
    return it->second;
  };
  StarPoly out;
  for (const auto& t : p.terms) {
    StarPoly acc(Word{}, t.coeff);
    for (const auto& f : t.factors) {
      if (!f.bracket) {
        acc = acc * letter(resolve(f.items.front()));
        continue;
      }
      std::vector<StarPoly> parts;
      for (const auto& v : f.items) parts.push_back(letter(resolve(v)));
      acc = acc * commutator(parts);
    }
    out += acc;
  }
  return out;
}

/// Every concrete choice for the unsigned variables: y -> y+/y-, z -> z+/z-,
/// x -> y+/y-/z+/z-. Choices are enumerated in a fixed order.
inline std::vector<SchemaChoice> schema_choices(const SyntaxPoly& p) {
  std::vector<SchemaChoice> out{SchemaChoice{}};
  for (const auto& [letter_, index] : schema_variables(p)) {
    std::vector<VarSymbol> options;
    if (letter_ == 'y' || letter_ == 'x') {
      options.push_back({index, Species::y, Symmetry::plus});
      options.push_back({index, Species::y, Symmetry::minus});
    }
    if (letter_ == 'z' || letter_ == 'x') {
      options.push_back({index, Species::z, Symmetry::plus});
      options.push_back({index, Species::z, Symmetry::minus});
    }
    std::vector<SchemaChoice> next;
    for (const auto& c : out)
      for (const auto& o : options) {
        auto d = c;
        d[{letter_, index}] = o;
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

/// Strict grammar: every variable must carry a sign.
inline StarPoly parse_star_poly(std::string_view text) {
  const auto syn = parse_syntax(text);
  for (const auto& t : syn.terms)
    for (const auto& f : t.factors)
      for (const auto& v : f.items)
        if (!v.sign)
          throw Error("unsigned variable " + to_string(v) +
                      " is only allowed in catalog mode; write it with '+' or '-'");
  return expand(syn);
}

/// Catalog mode: unsigned variables expand to all signed variants.
inline std::vector<StarPoly> parse_star_poly_schema(std::string_view text) {
  const auto syn = parse_syntax(text);
  std::vector<StarPoly> out;
  for (const auto& c : schema_choices(syn)) out.push_back(expand(syn, c));
  return out;
}

} // namespace starpi
