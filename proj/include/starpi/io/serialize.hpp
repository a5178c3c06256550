#pragma once

#include "json.hpp"

#include "starpi/images/ut3.hpp"
#include "starpi/pi/catalog.hpp"
#include "starpi/pi/codim.hpp"
#include "starpi/pi/identity.hpp"

#include <string>

namespace starpi::io {

using Json = nlohmann::ordered_json;

class JsonFormatError : public Error {
public:
  using Error::Error;
};

inline Json schema_tag(const std::string& kind) { return "starpi/" + kind + "/1"; }

inline void expect_schema(const Json& j, const std::string& kind) {
  if (!j.contains("schema") || j.at("schema") != schema_tag(kind))
    throw JsonFormatError("expected a document with schema " + schema_tag(kind).get<std::string>());
}

// Polynomials: [{"c": "-3/2", "m": [[row, col, slot, exponent], ...]}, ...]

inline Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::array();
    for (const auto& [id, e] : m.factors()) mono.push_back({id.row, id.col, id.slot, e});
    out.push_back({{"c", c.get_str()}, {"m", mono}});
  }
  return out;
}

inline Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("polynomial must be an array of terms");
  Poly p;
  for (const auto& t : j) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : t.at("m")) {
      if (!f.is_array() || f.size() != 4) throw JsonFormatError("monomial factor must be [row, col, slot, exponent]");
      fs.push_back({ParamId{f[0].get<std::uint32_t>(), f[1].get<std::uint32_t>(), f[2].get<std::uint32_t>()},
                    f[3].get<std::uint32_t>()});
    }
    p += Poly(Monomial(std::move(fs)), parse_scalar(t.at("c").get<std::string>()));
  }
  return p;
}

inline Json to_json(const std::vector<Poly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

inline std::vector<Poly> polys_from_json(const Json& j) {
  std::vector<Poly> out;
  for (const auto& p : j) out.push_back(poly_from_json(p));
  return out;
}

inline VarSymbol var_from_string(const std::string& s) {
  const auto vars = parse_star_poly(s).variables();
  if (vars.size() != 1) throw JsonFormatError("expected a single variable, got '" + s + "'");
  return vars.front();
}

inline Json to_json(const Assignment<Scalar>& a) {
  Json out = Json::object();
  for (const auto& [v, m] : a) out[to_string(v)] = to_string(m);
  return out;
}

inline Assignment<Scalar> assignment_from_json(const Json& j, std::uint32_t n) {
  Assignment<Scalar> a;
  for (const auto& [k, v] : j.items()) a.emplace(var_from_string(k), parse_rat_matrix(v.get<std::string>(), n));
  return a;
}

inline Json to_json(const Certificate& c) {
  Json j;
  j["schema"] = schema_tag("certificate");
  j["kind"] = to_string(c.kind);
  j["polynomial"] = c.polynomial;
  j["algebra"] = {{"n", c.n}, {"grading", c.grading}, {"involution", c.involution}};
  j["target"] = c.target;
  j["order"] = c.basis.order;
  j["constraints"] = to_json(c.constraints);
  if (c.kind == CertificateKind::infeasible) {
    j["basis"] = to_json(c.basis.generators);
    j["cofactors"] = to_json(c.cofactors);
  } else {
    Json pt = Json::array();
    for (const auto& [id, v] : c.point) pt.push_back({{"param", {id.row, id.col, id.slot}}, {"value", v.get_str()}});
    j["point"] = pt;
  }
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  expect_schema(j, "certificate");
  Certificate c;
  c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
  c.polynomial = j.at("polynomial").get<std::string>();
  c.n = j.at("algebra").at("n").get<std::uint32_t>();
  c.grading = j.at("algebra").at("grading").get<std::string>();
  c.involution = j.at("algebra").at("involution").get<std::string>();
  c.target = j.at("target").get<std::string>();
  c.basis.order = j.value("order", std::string("grevlex"));
  c.constraints = polys_from_json(j.at("constraints"));
  if (c.kind == CertificateKind::infeasible) {
    c.basis.generators = polys_from_json(j.at("basis"));
    c.cofactors = polys_from_json(j.at("cofactors"));
  } else {
    for (const auto& e : j.at("point")) {
      const auto& id = e.at("param");
      c.point[ParamId{id[0].get<std::uint32_t>(), id[1].get<std::uint32_t>(), id[2].get<std::uint32_t>()}] =
          parse_scalar(e.at("value").get<std::string>());
    }
  }
  return c;
}

inline ImageVerdict parse_image_verdict(const std::string& s) {
  if (s == "vector-space") return ImageVerdict::vector_space;
  if (s == "not-vector-space") return ImageVerdict::not_vector_space;
  if (s == "unknown") return ImageVerdict::unknown;
  throw JsonFormatError("unknown image verdict '" + s + "'");
}

/// n of an id like "UT4(0101, super-reflection)".
inline std::uint32_t spec_size(const std::string& id) {
  if (id.rfind("UT", 0) != 0) throw JsonFormatError("malformed algebra id '" + id + "'");
  return static_cast<std::uint32_t>(std::stoul(id.substr(2)));
}

inline Json to_json(const ImageReport& r) {
  Json j;
  j["schema"] = schema_tag("image-report");
  j["polynomial"] = r.polynomial;
  j["algebra"] = r.spec_id;
  j["verdict"] = to_string(r.verdict);
  j["label"] = verdict_label(r);
  j["certified"] = r.certified;
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_string(b));
  j["basis"] = basis;
  if (r.pair) {
    j["pair"] = {{"v1", to_string(r.pair->v1)},
                 {"v2", to_string(r.pair->v2)},
                 {"witness1", to_json(r.pair->witness1)},
                 {"witness2", to_json(r.pair->witness2)},
                 {"certificate", to_json(r.pair->certificate)}};
  }
  j["samples"] = {{"count", r.samples}, {"rank", r.sample_rank}, {"trials", r.trials}, {"seed", r.seed}};
  j["note"] = r.note;
  return j;
}

inline ImageReport image_report_from_json(const Json& j) {
  expect_schema(j, "image-report");
  ImageReport r;
  r.polynomial = j.at("polynomial").get<std::string>();
  r.spec_id = j.at("algebra").get<std::string>();
  const auto n = spec_size(r.spec_id);
  r.verdict = parse_image_verdict(j.at("verdict").get<std::string>());
  r.certified = j.at("certified").get<bool>();
  for (const auto& b : j.at("basis")) r.basis.push_back(parse_rat_matrix(b.get<std::string>(), n));
  if (j.contains("pair")) {
    const auto& p = j.at("pair");
    r.pair = ImagePair{parse_rat_matrix(p.at("v1").get<std::string>(), n),
                       parse_rat_matrix(p.at("v2").get<std::string>(), n),
                       assignment_from_json(p.at("witness1"), n), assignment_from_json(p.at("witness2"), n),
                       certificate_from_json(p.at("certificate"))};
  }
  const auto& s = j.at("samples");
  r.samples = s.at("count").get<std::size_t>();
  r.sample_rank = s.at("rank").get<std::size_t>();
  r.trials = s.at("trials").get<std::size_t>();
  r.seed = s.at("seed").get<std::uint64_t>();
  r.note = j.at("note").get<std::string>();
  return r;
}

inline Json to_json(const CodimReport& r) {
  Json j;
  j["schema"] = schema_tag("codim-report");
  j["algebra"] = r.spec_id;
  j["n"] = r.n;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"signature", row.signature.counts}, {"codim", row.codim}, {"multinomial", row.multinomial.get_str()}});
  j["rows"] = rows;
  j["total"] = r.total.get_str();
  j["closed_form"] = r.closed_form ? Json(r.closed_form->get_str()) : Json(nullptr);
  if (r.case_sums) {
    Json cs = Json::array();
    for (const auto& s : *r.case_sums) cs.push_back(s.get_str());
    j["case_sums"] = cs;
  } else {
    j["case_sums"] = nullptr;
  }
  j["beyond_cases"] = r.beyond_cases.get_str();
  return j;
}

inline CodimReport codim_report_from_json(const Json& j) {
  expect_schema(j, "codim-report");
  CodimReport r;
  r.spec_id = j.at("algebra").get<std::string>();
  r.n = j.at("n").get<std::uint32_t>();
  for (const auto& row : j.at("rows")) {
    CodimRow c;
    c.signature.counts = row.at("signature").get<decltype(c.signature.counts)>();
    c.codim = row.at("codim").get<std::size_t>();
    c.multinomial = BigInt(row.at("multinomial").get<std::string>());
    r.rows.push_back(std::move(c));
  }
  r.total = BigInt(j.at("total").get<std::string>());
  if (!j.at("closed_form").is_null()) r.closed_form = BigInt(j.at("closed_form").get<std::string>());
  if (!j.at("case_sums").is_null()) {
    std::array<BigInt, 4> cs;
    for (std::size_t k = 0; k < 4; ++k) cs[k] = BigInt(j.at("case_sums").at(k).get<std::string>());
    r.case_sums = cs;
  }
  r.beyond_cases = BigInt(j.at("beyond_cases").get<std::string>());
  return r;
}

inline Json to_json(const SuiteReport& r) {
  Json j;
  j["schema"] = schema_tag("suite-report");
  j["suite"] = r.suite;
  j["algebra"] = r.spec_id;
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  Json items = Json::array();
  for (const auto& i : r.items)
    items.push_back({{"label", i.label},
                     {"kind", i.kind},
                     {"poly", i.poly},
                     {"expected_identity", i.expected_identity},
                     {"passed", i.passed},
                     {"detail", i.detail}});
  j["items"] = items;
  return j;
}

inline SuiteReport suite_report_from_json(const Json& j) {
  expect_schema(j, "suite-report");
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.spec_id = j.at("algebra").get<std::string>();
  for (const auto& i : j.at("items"))
    r.items.push_back({i.at("label").get<std::string>(), i.at("kind").get<std::string>(), i.at("poly").get<std::string>(),
                       i.at("expected_identity").get<bool>(), i.at("passed").get<bool>(),
                       i.at("detail").get<std::string>()});
  return r;
}

inline Json to_json(const StarAlgebraSpec& spec) {
  Json j;
  j["schema"] = schema_tag("algebra");
  j["id"] = spec.id();
  j["n"] = spec.n();
  j["grading"] = spec.grading().str();
  j["involution"] = to_string(spec.kind());
  Json star = Json::array();
  for (const auto& p : ut_positions(spec.n())) {
    const auto& s = spec.star(p);
    star.push_back({{"position", to_string(p)}, {"image", to_string(s.pos)}, {"sign", s.sign}});
  }
  j["star"] = star;
  Json comps = Json::object();
  for (const ComponentTag tag : {ComponentTag{0, Symmetry::plus}, ComponentTag{0, Symmetry::minus},
                                 ComponentTag{1, Symmetry::plus}, ComponentTag{1, Symmetry::minus}}) {
    Json basis = Json::array();
    for (const auto& b : spec.component(tag)) basis.push_back(to_string(b.matrix(spec.n())));
    comps[to_string(tag)] = basis;
  }
  j["components"] = comps;
  return j;
}

inline Json to_json(const IdentityVerdict& v, const StarPoly& f, const StarAlgebraSpec& spec) {
  Json j;
  j["schema"] = schema_tag("identity-verdict");
  j["polynomial"] = to_string(f);
  j["algebra"] = spec.id();
  j["identity"] = v.is_identity;
  if (v.witness) {
    j["witness"] = to_json(*v.witness);
    j["value"] = to_string(v.value);
  }
  if (v.position) j["position"] = to_string(*v.position);
  return j;
}

inline Json to_json(const Ut3ImageClass& c) {
  Json j;
  j["schema"] = schema_tag("ut3-image-class");
  j["class"] = c.label();
  Json basis = Json::array();
  for (const auto& b : c.basis()) basis.push_back(to_string(b));
  j["basis"] = basis;
  Json alphas = Json::array(), betas = Json::array();
  for (const auto& a : c.alphas) alphas.push_back(a.get_str());
  for (const auto& b : c.betas) betas.push_back(b.get_str());
  j["alphas"] = alphas;
  j["betas"] = betas;
  return j;
}

inline Json to_json(const LemmaReport& r) {
  Json j;
  j["schema"] = schema_tag("lemma-report");
  j["all_passed"] = r.all_passed();
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"lemma", c.lemma}, {"l", c.l}, {"k", c.k}, {"i", c.i}, {"passed", c.passed}});
  j["checks"] = checks;
  return j;
}

} // namespace starpi::io
