#pragma once

#include "starpi/freestar/parser.hpp"
#include "starpi/pi/identity.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#ifndef STARPI_CATALOG_DIR
#define STARPI_CATALOG_DIR "catalogs"
#endif

namespace starpi {

struct CatalogCheck {
  std::string label;
  bool expect_identity = true;
  std::string poly; // freestar grammar, unsigned schema letters allowed

  bool operator==(const CatalogCheck&) const = default;
};

struct CatalogFixture {
  std::string label;
  std::string poly;
  std::vector<std::pair<std::string, std::string>> values; // variable text -> matrix text
  std::string expected;

  bool operator==(const CatalogFixture&) const = default;
};

struct Catalog {
  std::string id;
  std::uint32_t n = 0;
  std::string grading;
  std::string kind;
  std::vector<std::string> notes;
  std::vector<CatalogCheck> checks;
  std::vector<CatalogFixture> fixtures;

  bool operator==(const Catalog&) const = default;
};

class UnknownSuite : public Error {
public:
  using Error::Error;
};

inline constexpr std::string_view catalog_format_tag = "format starpi-catalog 1";

inline std::string format_catalog(const Catalog& c) {
  std::ostringstream os;
  os << catalog_format_tag << "\n";
  os << "suite " << c.id << "\n";
  os << "algebra n=" << c.n << " grading=" << c.grading << " kind=" << c.kind << "\n";
  for (const auto& note : c.notes) os << "note " << note << "\n";
  for (const auto& ch : c.checks)
    os << "check " << ch.label << " " << (ch.expect_identity ? "holds" : "fails") << " | " << ch.poly << "\n";
  for (const auto& fx : c.fixtures) {
    os << "fixture " << fx.label << " | " << fx.poly << " | ";
    for (std::size_t k = 0; k < fx.values.size(); ++k)
      os << (k ? "; " : "") << fx.values[k].first << "=" << fx.values[k].second;
    os << " | " << fx.expected << "\n";
  }
  return os.str();
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

} // namespace detail

inline Catalog parse_catalog(std::string_view text) {
  Catalog c;
  std::size_t line_no = 0;
  bool saw_format = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  auto fail = [&](const std::string& what) -> void {
    throw Error("catalog line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_format) {
      if (line != catalog_format_tag) fail("expected '" + std::string(catalog_format_tag) + "'");
      saw_format = true;
      continue;
    }
    const auto sp = line.find(' ');
    const std::string head = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp + 1));
    if (head == "suite") {
      c.id = rest;
    } else if (head == "algebra") {
      std::istringstream fields(rest);
      std::string f;
      while (fields >> f) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) fail("malformed algebra field '" + f + "'");
        const auto key = f.substr(0, eq);
        const auto val = f.substr(eq + 1);
        if (key == "n")
          c.n = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "grading")
          c.grading = val;
        else if (key == "kind")
          c.kind = val;
        else
          fail("unknown algebra field '" + key + "'");
      }
    } else if (head == "note") {
      c.notes.push_back(rest);
    } else if (head == "check") {
      const auto parts = detail::split(rest, '|');
      if (parts.size() != 2) fail("check needs '<label> holds|fails | <poly>'");
      std::istringstream hs(parts[0]);
      CatalogCheck ch;
      std::string verdict;
      hs >> ch.label >> verdict;
      if (verdict != "holds" && verdict != "fails") fail("verdict must be 'holds' or 'fails'");
      ch.expect_identity = verdict == "holds";
      ch.poly = parts[1];
      c.checks.push_back(std::move(ch));
    } else if (head == "fixture") {
      const auto parts = detail::split(rest, '|');
      if (parts.size() != 4) fail("fixture needs '<label> | <poly> | <values> | <expected>'");
      CatalogFixture fx{parts[0], parts[1], {}, parts[3]};
      for (const auto& b : detail::split(parts[2], ';')) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) fail("malformed binding '" + b + "'");
        fx.values.emplace_back(detail::trim(b.substr(0, eq)), detail::trim(b.substr(eq + 1)));
      }
      c.fixtures.push_back(std::move(fx));
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!saw_format) throw Error("catalog: missing format line");
  if (c.id.empty() || c.n == 0) throw Error("catalog: missing suite id or algebra line");
  return c;
}

// ---------------------------------------------------------------------------
// Generators

namespace detail {

inline std::string sv(char letter, std::uint32_t index, int sign) {
  std::string s(1, letter);
  s += std::to_string(index);
  if (sign > 0) s += "+";
  if (sign < 0) s += "-";
  return s;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

/// Signed terms joined into one polynomial text.
inline std::string sum(const std::vector<std::pair<int, std::string>>& terms) {
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const bool neg = terms[k].first < 0;
    if (k == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += terms[k].second;
  }
  return s;
}

inline int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

/// Even letters y_1..y_k with signs from the bit pattern (bit set = skew).
inline std::vector<std::string> even_letters(std::uint32_t k, std::uint32_t pattern, std::uint32_t first = 1) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(sv('y', first + i, (pattern >> i) & 1u ? -1 : 1));
  return out;
}

inline std::string pattern_tag(std::uint32_t k, std::uint32_t pattern) {
  std::string s;
  for (std::uint32_t i = 0; i < k; ++i) s += (pattern >> i) & 1u ? '-' : '+';
  return s;
}

inline std::string perm_tag(const std::vector<std::uint32_t>& p) {
  std::string s;
  for (auto v : p) s += std::to_string(v + 1);
  return s;
}

/// All non-identity permutations of 0..k-1, lexicographic.
inline std::vector<std::vector<std::uint32_t>> nontrivial_perms(std::uint32_t k) {
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::vector<std::uint32_t>> out;
  while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  return out;
}

inline std::vector<std::string> permuted(const std::vector<std::string>& w, const std::vector<std::uint32_t>& p) {
  std::vector<std::string> out;
  for (auto i : p) out.push_back(w[i]);
  return out;
}

inline std::vector<std::string> reversed(std::vector<std::string> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline std::string bracket(const std::vector<std::string>& items) { return "[" + join(items, ",") + "]"; }

} // namespace detail

inline Catalog catalog_ut3_superreflection() {
  Catalog c{"ut3-010-superreflection", 3, "010", "super-reflection", {}, {}, {}};
  c.notes.push_back("unsigned z in items 5-8 and 13 expand over both symmetry signs");
  c.notes.push_back("item 9 holds only when its two odd letters share a symmetry, so it is listed as 09a and 09b");
  const std::vector<std::string> items = {
      "[y1+,y2+]",
      "[y1+,y2-]",
      "y1- y2- y3- - y3- y2- y1-",
      "[y1-,y2-] [y3-,y4-]",
      "z1 [y2-,y3-]",
      "[y1-,y2-] z3",
      "y1- z2 y3-",
      "z1 y2- z3",
      "z1+ y2+ z3+ - z3+ y2+ z1+",
      "z1- y2+ z3- - z3- y2+ z1-",
      "[z1+,z2+]",
      "[z1-,z2-]",
      "z1+ z2- + z2- z1+",
      "z1 z2 z3",
  };
  const std::vector<std::string> labels = {"01", "02", "03", "04", "05",  "06", "07",
                                           "08", "09a", "09b", "10", "11", "12", "13"};
  for (std::size_t k = 0; k < items.size(); ++k) c.checks.push_back({"ut3-" + labels[k], true, items[k]});
  return c;
}

namespace detail {

/// Schema identities that hold on UT4(0101) with the super-symplectic involution.
inline std::vector<CatalogCheck> ut4_checks() {
  using namespace detail;
  std::vector<CatalogCheck> out;
  auto add = [&](std::string label, std::string poly) { out.push_back({std::move(label), true, std::move(poly)}); };

  // Basic list.
  add("basic-01", "[y1,y2] x3 [y4,y5]");
  add("basic-02", "[x1,x2,x3] - [x3,x2,x1] - [x1,x3,x2]");
  for (std::uint32_t k = 3; k <= 5; ++k) {
    std::vector<std::string> tail;
    for (std::uint32_t i = 3; i <= k; ++i) tail.push_back(sv('y', i, 0));
    std::vector<std::uint32_t> p(tail.size());
    std::iota(p.begin(), p.end(), 0u);
    while (std::next_permutation(p.begin(), p.end())) {
      std::vector<std::string> lhs = {"y1", "y2"};
      std::vector<std::string> rhs = {"y1", "y2"};
      for (auto i : p) lhs.push_back(tail[i]);
      for (const auto& t : tail) rhs.push_back(t);
      add("basic-03:k" + std::to_string(k) + ":p" + perm_tag(p), bracket(lhs) + " - " + bracket(rhs));
    }
  }
  add("basic-04", "z1+ y2 z3+");
  add("basic-05", "z1+ z2 z3+ - z3+ z2 z1+");
  add("basic-06", "z1- z2 z3- - z3- z2 z1-");
  add("basic-07", "z1 z2 z3 z4");
  add("basic-08", "z1- y2 z3+ y4 z5-");
  add("basic-09", "z1- y2 z3- y4 z5+ + z5+ y2 z3- y4 z1-");
  for (std::uint32_t a = 2; a <= 4; ++a) {
    std::vector<std::string> ys;
    for (std::uint32_t i = 1; i <= a; ++i) ys.push_back(sv('y', i, 0));
    const std::string com = bracket(ys);
    const std::string z = sv('z', a + 1, 0);
    const std::string yp = sv('y', a + 2, 1);
    const std::string ym = sv('y', a + 2, -1);
    add("basic-10:a" + std::to_string(a), com + " " + z + " " + yp + " - " + yp + " " + com + " " + z);
    add("basic-11:a" + std::to_string(a), com + " " + z + " " + ym + " + " + ym + " " + com + " " + z);
  }

  // Reversal identities with one odd letter, k <= 4, every permutation and sign pattern.
  for (int item = 0; item < 2; ++item) {
    const std::string name = item == 0 ? "reversal-i" : "reversal-ii";
    for (std::uint32_t k = 2; k <= 4; ++k)
      for (std::uint32_t pat = 0; pat < (1u << k); ++pat) {
        const auto g = static_cast<long>(std::popcount(pat));
        const auto w = even_letters(k, pat);
        const std::string z = sv('z', k + 1, item == 0 ? 1 : -1);
        const int c = item == 0 ? parity_sign(g + 1) : parity_sign(g);
        for (const auto& p : nontrivial_perms(k)) {
          const auto ws = permuted(w, p);
          const std::string poly =
              sum({{1, join(w) + " " + z},
                   {-1, join(ws) + " " + z},
                   {c, z + " " + join(reversed(w))},
                   {-c, z + " " + join(reversed(ws))}});
          add(name + ":k" + std::to_string(k) + ":w" + pattern_tag(k, pat) + ":p" + perm_tag(p), poly);
        }
      }
  }

  // Two odd letters.
  for (std::uint32_t k = 2; k <= 3; ++k) {
    std::vector<std::string> w;
    for (std::uint32_t i = 1; i <= k; ++i) w.push_back(sv('y', i, 0));
    const std::string z1 = sv('z', k + 1, 0);
    const std::string z2 = sv('z', k + 2, 0);
    for (const auto& p : nontrivial_perms(k)) {
      const auto ws = join(permuted(w, p));
      const auto tag = ":k" + std::to_string(k) + ":p" + perm_tag(p);
      add("two-odd-a" + tag, ws + " " + z1 + " " + z2 + " - " + join(w) + " " + z1 + " " + z2);
      add("two-odd-b" + tag, z1 + " " + ws + " " + z2 + " - " + z1 + " " + join(w) + " " + z2);
      add("two-odd-c" + tag, z1 + " " + z2 + " " + ws + " - " + z1 + " " + z2 + " " + join(w));
    }
  }
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t pat = 0; pat < (1u << k); ++pat) {
      const auto g = static_cast<long>(std::popcount(pat));
      const auto w = join(even_letters(k, pat));
      const auto zm = sv('z', k + 1, -1);
      const auto zp = sv('z', k + 2, 1);
      const int c = parity_sign(g + 1);
      const auto tag = ":k" + std::to_string(k) + ":w" + pattern_tag(k, pat);
      add("two-odd-d" + tag, sum({{1, zm + " " + w + " " + zp}, {c, w + " " + zm + " " + zp}}));
      const auto zp1 = sv('z', k + 1, 1);
      const auto zm2 = sv('z', k + 2, -1);
      add("two-odd-e" + tag, sum({{1, zp1 + " " + w + " " + zm2}, {c, zp1 + " " + zm2 + " " + w}}));
    }
  // Four arrangements of two skew odd letters among three groups of even letters.
  for (std::uint32_t a = 0; a <= 3; ++a)
    for (std::uint32_t a2 = 0; a + a2 <= 3; ++a2)
      for (std::uint32_t b = 0; a + a2 + b <= 3; ++b)
        for (std::uint32_t b2 = 0; a + a2 + b + b2 <= 3; ++b2)
          for (std::uint32_t cc = 0; a + a2 + b + b2 + cc <= 3; ++cc)
            for (std::uint32_t c2 = 0; a + a2 + b + b2 + cc + c2 <= 3; ++c2) {
              const std::uint32_t m = a + a2 + b + b2 + cc + c2;
              if (m == 0) continue;
              std::uint32_t idx = 1;
              auto group = [&](std::uint32_t plus, std::uint32_t minus) {
                std::vector<std::string> g;
                for (std::uint32_t i = 0; i < plus; ++i) g.push_back(sv('y', idx++, 1));
                for (std::uint32_t i = 0; i < minus; ++i) g.push_back(sv('y', idx++, -1));
                return g;
              };
              const auto gi = group(a, a2);
              const auto gj = group(b, b2);
              const auto gl = group(cc, c2);
              const auto z1 = sv('z', m + 1, -1);
              const auto z2 = sv('z', m + 2, -1);
              auto word = [](std::initializer_list<std::vector<std::string>> parts) {
                std::vector<std::string> all;
                for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
                return join(all);
              };
              const auto p1 = word({gi, {z1}, gj, {z2}, gl});
              const auto p2 = word({{z1}, gi, gj, {z2}, gl});
              const auto p3 = word({{z1}, gi, gj, gl, {z2}});
              const auto p4 = word({gi, {z1}, gj, gl, {z2}});
              const auto tag = ":" + std::to_string(a) + std::to_string(a2) + std::to_string(b) +
                               std::to_string(b2) + std::to_string(cc) + std::to_string(c2);
              add("two-odd-f" + tag, sum({{parity_sign(a2 + c2), p1},
                                          {-parity_sign(c2), p2},
                                          {1, p3},
                                          {-parity_sign(a2), p4}}));
            }

  // Three odd letters.
  for (std::uint32_t k = 1; k <= 3; ++k)
    for (std::uint32_t pat = 0; pat < (1u << k); ++pat) {
      const auto g = static_cast<long>(std::popcount(pat));
      const auto w = join(even_letters(k, pat));
      const auto z1 = sv('z', k + 1, 0);
      const auto z2 = sv('z', k + 2, 0);
      const auto z3 = sv('z', k + 3, 0);
      const auto tag = ":k" + std::to_string(k) + ":w" + pattern_tag(k, pat);
      add("three-odd-a" + tag,
          sum({{1, z1 + " " + z2 + " " + w + " " + z3}, {-parity_sign(g), z1 + " " + w + " " + z2 + " " + z3}}));
      add("three-odd-b" + tag,
          sum({{parity_sign(g), w + " " + z1 + " " + z2 + " " + z3}, {-1, z1 + " " + z2 + " " + z3 + " " + w}}));
    }
  return out;
}

} // namespace detail

inline Catalog catalog_ut4_supersymplectic() {
  Catalog c{"ut4-0101-supersymplectic", 4, "0101", "super-symplectic", {}, {}, {}};
  c.notes.push_back("unsigned y, z and x expand over every matching signed letter");
  c.notes.push_back("schema families instantiated for k <= 4 (reversal) and k <= 3 (two and three odd letters)");
  c.notes.push_back("basic-09 carries a plus sign between its two terms; the minus variant is not an identity");
  c.checks = detail::ut4_checks();
  return c;
}

namespace detail {

inline RatMatrix ut4_matrix(std::string_view text) { return parse_rat_matrix(text, 4); }

/// Evaluations that separate the four families of even-only generators.
inline std::vector<CatalogFixture> ut4_even_fixtures(std::uint32_t max_degree) {
  std::vector<CatalogFixture> out;
  const std::string mid = "e11 - e22 + e33 - e44";
  auto outside = [&](std::uint32_t a, std::uint32_t b, std::uint32_t& idx, const std::string& minus_value,
                     std::vector<std::string>& word, std::vector<std::pair<std::string, std::string>>& vals) {
    for (std::uint32_t i = 0; i < a; ++i) {
      const auto v = sv('y', idx++, 1);
      word.push_back(v);
      vals.emplace_back(v, "I");
    }
    for (std::uint32_t i = 0; i < b; ++i) {
      const auto v = sv('y', idx++, -1);
      word.push_back(v);
      vals.emplace_back(v, minus_value);
    }
  };
  auto expected = [](int c13, int c24) {
    RatMatrix m(4);
    m(1, 3) = c13;
    m(2, 4) = c24;
    return to_string(m);
  };
  auto tag = [](const char* t, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return std::string(t) + ":a" + std::to_string(a) + "b" + std::to_string(b) + "c" + std::to_string(c) +
           "d" + std::to_string(d);
  };

  // Family A: products of symmetric then skew letters.
  for (std::uint32_t a = 0; a <= max_degree; ++a)
    for (std::uint32_t b = 0; a + b <= max_degree; ++b) {
      if (a + b == 0) continue;
      std::uint32_t idx = 1;
      std::vector<std::string> word;
      CatalogFixture fx;
      outside(a, b, idx, "e11 - e44", word, fx.values);
      // With no skew letter every letter is I and so is the word.
      RatMatrix m = b == 0 ? RatMatrix::identity(4) : RatMatrix(4);
      if (b > 0) {
        m(1, 1) = 1;
        m(4, 4) = parity_sign(b);
      }
      fx.label = "eval1-A:a" + std::to_string(a) + "b" + std::to_string(b);
      fx.poly = join(word);
      fx.expected = to_string(m);
      out.push_back(std::move(fx));
    }

  // Families B, C, D: a commutator after the sorted prefix.
  for (std::uint32_t a = 0; a <= max_degree; ++a)
    for (std::uint32_t b = 0; a + b <= max_degree; ++b)
      for (std::uint32_t c = 1; a + b + c + 1 <= max_degree; ++c)
        for (std::uint32_t d = 0; a + b + 1 + c + d <= max_degree; ++d) {
          {
            // B: [y_k+, y_l+ ..., y_m- ...] with k > l_1.
            std::uint32_t idx = 1;
            std::vector<std::string> word;
            CatalogFixture fx;
            outside(a, b, idx, mid, word, fx.values);
            std::vector<std::string> ls, ms;
            for (std::uint32_t i = 0; i < c; ++i) ls.push_back(sv('y', idx++, 1));
            const auto k = sv('y', idx++, 1);
            for (std::uint32_t i = 0; i < d; ++i) ms.push_back(sv('y', idx++, -1));
            std::vector<std::string> com = {k};
            com.insert(com.end(), ls.begin(), ls.end());
            com.insert(com.end(), ms.begin(), ms.end());
            word.push_back(bracket(com));
            fx.values.emplace_back(k, "e13 + e24");
            for (const auto& l : ls) fx.values.emplace_back(l, "e11 + e44");
            for (const auto& m : ms) fx.values.emplace_back(m, "e22 - e33");
            const int s = parity_sign(d);
            fx.label = tag("eval2-B", a, b, c, d);
            fx.poly = join(word);
            fx.expected = expected(s * parity_sign(c), s * parity_sign(b));
            out.push_back(std::move(fx));
          }
          {
            // C: [y_k-, y_l- ..., y_m+ ...] with k > l_1.
            std::uint32_t idx = 1;
            std::vector<std::string> word;
            CatalogFixture fx;
            outside(a, b, idx, mid, word, fx.values);
            std::vector<std::string> ls, ms;
            for (std::uint32_t i = 0; i < c; ++i) ls.push_back(sv('y', idx++, -1));
            const auto k = sv('y', idx++, -1);
            for (std::uint32_t i = 0; i < d; ++i) ms.push_back(sv('y', idx++, 1));
            std::vector<std::string> com = {k};
            com.insert(com.end(), ls.begin(), ls.end());
            com.insert(com.end(), ms.begin(), ms.end());
            word.push_back(bracket(com));
            fx.values.emplace_back(k, "e13 - e24");
            for (const auto& l : ls) fx.values.emplace_back(l, "e11 - e44");
            for (const auto& m : ms) fx.values.emplace_back(m, "e22 + e33");
            const int s = parity_sign(c);
            fx.label = tag("eval4-C", a, b, c, d);
            fx.poly = join(word);
            fx.expected = expected(s, s * parity_sign(b + d + 1));
            out.push_back(std::move(fx));
          }
          if (d >= 1) {
            // D: [y_l1+, y_m- ..., y_l2+ ...]; c counts every symmetric letter.
            std::uint32_t idx = 1;
            std::vector<std::string> word;
            CatalogFixture fx;
            outside(a, b, idx, mid, word, fx.values);
            std::vector<std::string> ls, ms;
            for (std::uint32_t i = 0; i < c; ++i) ls.push_back(sv('y', idx++, 1));
            for (std::uint32_t i = 0; i < d; ++i) ms.push_back(sv('y', idx++, -1));
            std::vector<std::string> com = {ls.front()};
            com.insert(com.end(), ms.begin(), ms.end());
            com.insert(com.end(), ls.begin() + 1, ls.end());
            word.push_back(bracket(com));
            fx.values.emplace_back(ls.front(), "e13 + e24");
            for (std::size_t i = 1; i < ls.size(); ++i) fx.values.emplace_back(ls[i], "e22 + e33");
            for (const auto& m : ms) fx.values.emplace_back(m, "e11 - e44");
            const int s = parity_sign(d);
            fx.label = tag("eval3-D", a, b, c, d);
            fx.poly = join(word);
            fx.expected = expected(s, s * parity_sign(b + c - 1));
            out.push_back(std::move(fx));
          }
        }
  return out;
}

} // namespace detail

inline Catalog catalog_ut4_supersymplectic_fixtures() {
  Catalog c{"ut4-0101-supersymplectic-fixtures", 4, "0101", "super-symplectic", {}, {}, {}};
  c.notes.push_back("separating evaluations of the even-only generator families, total degree <= 6");
  c.notes.push_back("family A with no skew letter evaluates to I");
  c.notes.push_back("family D: c counts every symmetric letter of the commutator, so the e24 sign is (-1)^(b+c-1)");
  c.fixtures = detail::ut4_even_fixtures(6);
  return c;
}

/// Replaces each unsigned letter by the chosen signed one.
inline SyntaxPoly concretize(SyntaxPoly p, const SchemaChoice& choice) {
  for (auto& t : p.terms)
    for (auto& f : t.factors)
      for (auto& v : f.items) {
        if (v.sign) continue;
        const auto& c = choice.at({v.letter, v.index});
        v.letter = c.species == Species::z ? 'z' : 'y';
        v.sign = c.symmetry;
      }
  return p;
}

/// Single-sign-flip mutants of the super-symplectic catalog: for the first
/// concrete instance of each of the first `per_family` checks per family,
/// flip the sign of the last top-level term that is not itself an identity.
inline Catalog catalog_ut4_supersymplectic_mutated(std::size_t per_family = 3) {
  const auto spec = build_algebra(4, "0101", "super-symplectic");
  Catalog c{"ut4-0101-supersymplectic-mutated", 4, "0101", "super-symplectic", {}, {}, {}};
  c.notes.push_back("each entry flips the sign of one term of an identity; every entry must fail");
  std::map<std::string, std::size_t> taken;
  for (const auto& ch : detail::ut4_checks()) {
    const auto family = ch.label.substr(0, ch.label.find(':'));
    if (taken[family] >= per_family) continue;
    const auto syn = parse_syntax(ch.poly);
    if (syn.terms.size() < 2) continue;
    auto concrete = concretize(syn, schema_choices(syn).front());
    std::optional<std::size_t> flip;
    for (std::size_t t = concrete.terms.size(); t-- > 0;) {
      SyntaxPoly single{{concrete.terms[t]}};
      if (!is_identity(expand(single), spec).is_identity) {
        flip = t;
        break;
      }
    }
    if (!flip) continue;
    concrete.terms[*flip].coeff = -concrete.terms[*flip].coeff;
    c.checks.push_back({"mutant:" + ch.label + ":t" + std::to_string(*flip + 1), false, to_string(concrete)});
    ++taken[family];
  }
  return c;
}

inline std::vector<std::string> catalog_ids() {
  return {"ut3-010-superreflection", "ut4-0101-supersymplectic", "ut4-0101-supersymplectic-fixtures",
          "ut4-0101-supersymplectic-mutated"};
}

/// Builds a catalog from its generator.
inline Catalog generate_catalog(std::string_view id) {
  if (id == "ut3-010-superreflection") return catalog_ut3_superreflection();
  if (id == "ut4-0101-supersymplectic") return catalog_ut4_supersymplectic();
  if (id == "ut4-0101-supersymplectic-fixtures") return catalog_ut4_supersymplectic_fixtures();
  if (id == "ut4-0101-supersymplectic-mutated") return catalog_ut4_supersymplectic_mutated();
  throw UnknownSuite("unknown suite '" + std::string(id) + "'");
}

/// Catalog directory: $STARPI_CATALOG_DIR, else the build-time default.
inline std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("STARPI_CATALOG_DIR"); env && *env) return env;
  return STARPI_CATALOG_DIR;
}

/// Reads <dir>/<id>.cat.
inline Catalog load_catalog(std::string_view id, const std::filesystem::path& dir = catalog_dir()) {
  const auto ids = catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw UnknownSuite("unknown suite '" + std::string(id) + "'");
  const auto path = dir / (std::string(id) + ".cat");
  std::ifstream in(path);
  if (!in) throw Error("cannot read catalog file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  auto c = parse_catalog(ss.str());
  if (c.id != id) throw Error("catalog file " + path.string() + " declares suite '" + c.id + "'");
  return c;
}

// ---------------------------------------------------------------------------
// Running

struct SuiteItem {
  std::string label;
  std::string kind; // "check" or "fixture"
  std::string poly; // concrete instance
  bool expected_identity = true;
  bool passed = false;
  std::string detail;

  bool operator==(const SuiteItem&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::string spec_id;
  std::vector<SuiteItem> items;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return i.passed; }));
  }
  std::size_t failed() const { return items.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  bool operator==(const SuiteReport&) const = default;
};

inline std::string assignment_text(const Assignment<Scalar>& a) {
  std::string s;
  for (const auto& [v, m] : a) s += (s.empty() ? "" : "; ") + to_string(v) + "=" + to_string(m);
  return s;
}

inline SuiteReport run_catalog(const StarAlgebraSpec& spec, const Catalog& cat, std::uint64_t seed = 1) {
  if (cat.n != spec.n() || cat.grading != spec.grading().str() || cat.kind != to_string(spec.kind()))
    throw Error("suite '" + cat.id + "' is for UT" + std::to_string(cat.n) + "(" + cat.grading + ", " + cat.kind +
                "), not " + spec.id());
  SuiteReport r{cat.id, spec.id(), {}};
  for (const auto& ch : cat.checks) {
    const auto syn = parse_syntax(ch.poly);
    const auto choices = schema_choices(syn);
    for (std::size_t k = 0; k < choices.size(); ++k) {
      SuiteItem item;
      item.label = choices.size() > 1 ? ch.label + "#" + std::to_string(k + 1) : ch.label;
      item.kind = "check";
      item.expected_identity = ch.expect_identity;
      const StarPoly f = expand(syn, choices[k]);
      item.poly = to_string(concretize(syn, choices[k]));
      const auto v = is_identity(f, spec, seed);
      if (v.is_identity) {
        item.passed = ch.expect_identity;
        item.detail = "identity";
      } else {
        // Re-check the witness from scratch.
        const auto value = substitute<Scalar>(f, *v.witness, spec);
        const bool witness_ok = !value.is_zero() && value == v.value;
        item.passed = !ch.expect_identity && witness_ok;
        item.detail = "not identity; witness " + assignment_text(*v.witness) + " gives " + to_string(value);
      }
      r.items.push_back(std::move(item));
    }
  }
  for (const auto& fx : cat.fixtures) {
    SuiteItem item;
    item.label = fx.label;
    item.kind = "fixture";
    item.poly = fx.poly;
    const StarPoly f = parse_star_poly(fx.poly);
    Assignment<Scalar> a;
    for (const auto& [var, mat] : fx.values) {
      const StarPoly pv = parse_star_poly(var);
      if (pv.size() != 1 || pv.terms().begin()->first.size() != 1)
        throw Error("fixture " + fx.label + ": '" + var + "' is not a single variable");
      a.emplace(pv.terms().begin()->first.front(), parse_rat_matrix(mat, spec.n()));
    }
    const auto value = substitute<Scalar>(f, a, spec);
    const auto want = parse_rat_matrix(fx.expected, spec.n());
    item.passed = value == want;
    item.detail = "value " + to_string(value) + ", expected " + to_string(want);
    r.items.push_back(std::move(item));
  }
  return r;
}

/// Loads the named catalog file and runs it against spec.
inline SuiteReport run_suite(const StarAlgebraSpec& spec, std::string_view suite_id, std::uint64_t seed = 1) {
  return run_catalog(spec, load_catalog(suite_id), seed);
}

} // namespace starpi
