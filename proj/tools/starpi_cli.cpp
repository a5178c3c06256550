#include "CLI11.hpp"
#include "starpi/starpi.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace starpi;
using io::Json;

namespace {

constexpr std::uint64_t default_seed = 20240601;

enum Exit : int { ok = 0, negative = 1, usage = 2, incomplete = 3 };

class UsageError : public Error {
public:
  using Error::Error;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("STARPI_SEED");
  if (!s || !*s) return default_seed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::strlen(s)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("STARPI_SEED is not an unsigned integer: '") + s + "'");
  }
}

struct Options {
  std::uint32_t n = 4;
  std::string grading = "0101";
  std::string kind = "super-symplectic";
  std::string poly;
  std::string suite;
  std::string target;
  std::string out;
  std::string file;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool json = false;
  bool check_closed_form = false;
  std::uint32_t max_degree = 4;
  std::uint32_t l_max = 3;
  std::uint32_t k_max = 5;
  bool validate = false;
};

std::uint64_t seed_of(const Options& o) { return o.seed_given ? o.seed : env_seed(); }

StarAlgebraSpec spec_of(const Options& o) {
  if (o.grading.size() != o.n)
    throw UsageError("grading '" + o.grading + "' has length " + std::to_string(o.grading.size()) + ", expected n = " +
                     std::to_string(o.n));
  return build_algebra(o.n, o.grading, o.kind);
}

StarPoly poly_of(const Options& o) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  return parse_star_poly(o.poly);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

/// JSON to --out (or stdout) when --json is set, otherwise the text form to stdout.
void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    const std::string doc = j.dump(2) + "\n";
    if (o.out.empty())
      std::cout << doc;
    else
      write_text(o.out, doc);
  } else {
    std::cout << text;
  }
}

std::string star_table_text(const StarAlgebraSpec& spec) {
  std::ostringstream s;
  s << spec.id() << "\n";
  for (const ComponentTag tag : {ComponentTag{0, Symmetry::plus}, ComponentTag{0, Symmetry::minus},
                                 ComponentTag{1, Symmetry::plus}, ComponentTag{1, Symmetry::minus}}) {
    s << "  " << std::left << std::setw(4) << to_string(tag) << " dim " << spec.component(tag).size() << ":";
    for (const auto& b : spec.component(tag)) s << "  [" << to_string(b.matrix(spec.n())) << "]";
    s << "\n";
  }
  s << "  star:";
  for (const auto& p : ut_positions(spec.n())) {
    const auto& t = spec.star(p);
    s << " " << to_string(RatMatrix::unit(spec.n(), p)) << "->" << (t.sign > 0 ? "" : "-")
      << to_string(RatMatrix::unit(spec.n(), t.pos));
  }
  s << "\n";
  return s.str();
}

int cmd_algebra_show(const Options& o) {
  const auto spec = spec_of(o);
  emit(o, io::to_json(spec), star_table_text(spec));
  return ok;
}

int cmd_check_identity(const Options& o) {
  const auto spec = spec_of(o);
  const auto f = poly_of(o);
  const auto v = is_identity(f, spec, seed_of(o));
  std::string text = v.is_identity ? "identity\n" : "not an identity\n";
  if (v.witness) text += "  witness: " + assignment_text(*v.witness) + "\n  value:   " + to_string(v.value) + "\n";
  emit(o, io::to_json(v, f, spec), text);
  return v.is_identity ? ok : negative;
}

int cmd_suite_run(const Options& o) {
  if (o.suite.empty()) throw UsageError("--suite is required; known suites: " + [] {
    std::string s;
    for (const auto& id : catalog_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }());
  const auto cat = load_catalog(o.suite);
  const auto spec = build_algebra(cat.n, cat.grading, cat.kind);
  const auto r = run_catalog(spec, cat, seed_of(o));
  std::ostringstream s;
  s << r.suite << " on " << r.spec_id << ": " << r.passed() << "/" << r.items.size() << " passed\n";
  for (const auto& i : r.items)
    if (!i.passed) s << "  FAIL " << i.label << "  " << i.poly << "  " << i.detail << "\n";
  emit(o, io::to_json(r), s.str());
  return r.all_passed() ? ok : negative;
}

int cmd_suite_list(const Options& o) {
  Json j = Json::array();
  std::string text;
  for (const auto& id : catalog_ids()) {
    j.push_back(id);
    text += id + "\n";
  }
  emit(o, j, text);
  return ok;
}

int cmd_suite_export(const Options& o) {
  const std::filesystem::path dir = o.out.empty() ? catalog_dir() : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  for (const auto& id : catalog_ids()) {
    const auto path = dir / (id + ".cat");
    write_text(path.string(), format_catalog(generate_catalog(id)));
    std::cout << "wrote " << path.string() << "\n";
  }
  return ok;
}

int cmd_codim(const Options& o) {
  const auto spec = spec_of(o);
  if (o.max_degree < 1) throw UsageError("--max-degree must be >= 1");
  if (o.check_closed_form && !is_ut4_0101_supersymplectic(spec))
    throw UsageError("--check-closed-form applies to UT4(0101, super-symplectic) only");
  Json reports = Json::array();
  std::ostringstream s;
  bool match = true;
  s << spec.id() << "\n";
  for (std::uint32_t d = 1; d <= o.max_degree; ++d) {
    const auto r = codim_total(spec, d);
    reports.push_back(io::to_json(r));
    s << "degree " << d << "\n";
    s << "  " << std::setw(14) << std::left << "(n1,n2,n3,n4)" << std::right << std::setw(8) << "codim" << std::setw(14)
      << "multinomial" << "\n";
    for (const auto& row : r.rows)
      s << "  " << std::setw(14) << std::left << to_string(row.signature) << std::right << std::setw(8) << row.codim
        << std::setw(14) << row.multinomial.get_str() << "\n";
    s << "  total " << r.total.get_str();
    if (r.closed_form) {
      s << "  closed form " << r.closed_form->get_str() << (r.total == *r.closed_form ? "  match" : "  MISMATCH");
      if (r.total != *r.closed_form) match = false;
    }
    s << "\n";
    if (r.case_sums) {
      const auto expected = case_sums_ut4(d);
      s << "  by odd count:";
      for (std::size_t k = 0; k < 4; ++k) {
        s << " " << (*r.case_sums)[k].get_str();
        if ((*r.case_sums)[k] != expected[k]) {
          s << "(expected " << expected[k].get_str() << ")";
          match = false;
        }
      }
      s << "\n";
    }
  }
  Json j;
  j["schema"] = io::schema_tag("codim-table");
  j["algebra"] = spec.id();
  j["degrees"] = reports;
  emit(o, j, s.str());
  return o.check_closed_form && !match ? negative : ok;
}

std::string image_text(const ImageReport& r) {
  std::ostringstream s;
  s << r.polynomial << " on " << r.spec_id << ": " << verdict_label(r) << "\n";
  if (!r.basis.empty()) {
    s << "  sampled span:";
    for (const auto& b : r.basis) s << "  [" << to_string(b) << "]";
    s << "\n";
  }
  if (r.pair) {
    s << "  v1 = " << to_string(r.pair->v1) << "  from " << assignment_text(r.pair->witness1) << "\n";
    s << "  v2 = " << to_string(r.pair->v2) << "  from " << assignment_text(r.pair->witness2) << "\n";
    s << "  v1 + v2 is not in the image (" << r.pair->certificate.constraints.size()
      << " constraints, reduced basis {1})\n";
  }
  if (!r.note.empty()) s << "  " << r.note << "\n";
  return s.str();
}

int image_exit(const ImageReport& r) {
  switch (r.verdict) {
  case ImageVerdict::vector_space: return ok;
  case ImageVerdict::not_vector_space: return negative;
  default: return incomplete;
  }
}

int cmd_image_classify(const Options& o) {
  const auto f = poly_of(o);
  const auto c = classify_image_ut3_any(f);
  Json j = io::to_json(c);
  j["polynomial"] = to_string(f);
  std::ostringstream s;
  s << to_string(f) << " on " << ut3_super_reflection().id() << ": " << c.label() << "\n  basis:";
  for (const auto& b : c.basis()) s << "  [" << to_string(b) << "]";
  s << "\n";
  int code = ok;
  if (o.validate) {
    const auto v = validate_ut3_class(f, c, o.trials, seed_of(o));
    j["validation"] = {{"samples", v.samples}, {"outside", v.outside}, {"consistent", v.consistent()}};
    s << "  validation: " << v.samples << " samples, " << v.outside << " outside, witnesses "
      << std::count_if(v.witnesses.begin(), v.witnesses.end(), [](const auto& w) { return w.has_value(); }) << "/"
      << v.witnesses.size() << "\n";
    if (!v.consistent()) code = negative;
  }
  emit(o, j, s.str());
  return code;
}

int cmd_image_member(const Options& o) {
  const auto spec = spec_of(o);
  const auto f = poly_of(o);
  if (o.target.empty()) throw UsageError("--target is required, e.g. --target \"e12 + e23\"");
  const auto target = parse_rat_matrix(o.target, spec.n());
  Json j;
  j["schema"] = io::schema_tag("membership");
  j["polynomial"] = to_string(f);
  j["algebra"] = spec.id();
  j["target"] = to_string(target);
  std::ostringstream s;
  int code;
  if (f.variables().size() <= 2) {
    DecideOptions d;
    d.seed = seed_of(o);
    d.search_trials = std::max<std::size_t>(o.trials, 1);
    const auto r = membership_decide(f, spec, target, d);
    j["outcome"] = to_string(r.outcome);
    j["reason"] = r.reason;
    s << to_string(target) << " " << (r.outcome == Membership::in    ? "is in"
                                      : r.outcome == Membership::out ? "is not in"
                                                                     : "undecided for")
      << " the image of " << to_string(f) << " on " << spec.id() << "\n";
    if (r.witness) {
      j["witness"] = io::to_json(*r.witness);
      s << "  witness: " << assignment_text(*r.witness) << "\n";
    }
    if (r.certificate) {
      j["certificate"] = io::to_json(*r.certificate);
      if (!o.out.empty() && !o.json) {
        write_text(o.out, io::to_json(*r.certificate).dump(2) + "\n");
        s << "  certificate written to " << o.out << "\n";
      }
    }
    if (r.outcome == Membership::unknown) s << "  " << r.reason << "\n";
    code = r.outcome == Membership::in ? ok : r.outcome == Membership::out ? negative : incomplete;
  } else {
    const auto w = membership_search(f, spec, target, o.trials, seed_of(o));
    j["outcome"] = w ? "IN" : "unknown";
    if (w) j["witness"] = io::to_json(*w);
    s << to_string(target) << (w ? " is in" : " was not found in") << " the image of " << to_string(f) << "\n";
    if (w) s << "  witness: " << assignment_text(*w) << "\n";
    code = w ? ok : incomplete;
  }
  emit(o, j, s.str());
  return code;
}

int cmd_image_probe(const Options& o) {
  const auto spec = spec_of(o);
  const auto f = poly_of(o);
  ProbeOptions p;
  p.trials = o.trials;
  p.seed = seed_of(o);
  p.decide.seed = p.seed;
  const auto r = vector_space_probe(f, spec, p);
  emit(o, io::to_json(r), image_text(r));
  return image_exit(r);
}

int cmd_image_counterexample(const Options& o) {
  DecideOptions d;
  d.seed = seed_of(o);
  const auto r = counterexample_utn(o.n, d);
  std::string text = image_text(r);
  if (r.pair && !o.json) {
    const std::string path = o.out.empty() ? "counterexample-n" + std::to_string(o.n) + ".cert.json" : o.out;
    write_text(path, io::to_json(r.pair->certificate).dump(2) + "\n");
    text += "  certificate written to " + path + "\n";
  }
  emit(o, io::to_json(r), text);
  // The report is the expected finding here, not a failed check.
  return r.verdict == ImageVerdict::not_vector_space ? ok : incomplete;
}

int cmd_lemmas_verify(const Options& o) {
  const auto r = verify_structure_lemmas(o.l_max, o.k_max);
  std::ostringstream s;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    passed += c.passed;
    if (!c.passed) s << "  FAIL " << c.lemma << " l=" << c.l << " k=" << c.k << " i=" << c.i << "\n";
  }
  s << passed << "/" << r.checks.size() << " closed forms confirmed\n";
  emit(o, io::to_json(r), s.str());
  return r.all_passed() ? ok : negative;
}

int cmd_verify_certificate(const Options& o) {
  std::ifstream in(o.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(o.file + ": " + e.what());
  }
  if (j.contains("schema") && j.at("schema") == io::schema_tag("image-report")) {
    if (!j.contains("pair")) throw UsageError(o.file + ": image report carries no certificate");
    j = j.at("pair").at("certificate");
  }
  const auto cert = io::certificate_from_json(j);
  const auto check = verify_certificate(cert);
  Json out;
  out["schema"] = io::schema_tag("certificate-check");
  out["kind"] = to_string(cert.kind);
  out["valid"] = check.valid;
  out["reason"] = check.reason;
  emit(o, out, std::string(check.valid ? "valid" : "INVALID") + " " + to_string(cert.kind) + " certificate: " +
                   check.reason + "\n");
  return check.valid ? ok : negative;
}

void add_spec_flags(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "matrix size")->capture_default_str();
  app->add_option("--grading", o.grading, "grading as a 0/1 string of length n")->capture_default_str();
  app->add_option("--kind", o.kind, "reflection, symplectic, super-reflection or super-symplectic")
      ->capture_default_str();
}

void add_common_flags(CLI::App* app, Options& o) {
  app->add_flag("--json", o.json, "emit JSON");
  app->add_option("--out", o.out, "output path");
  app->add_option_function<std::uint64_t>(
      "--seed",
      [&o](const std::uint64_t& s) {
        o.seed = s;
        o.seed_given = true;
      },
      "random seed (default: $STARPI_SEED, else 20240601)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with graded upper triangular matrix algebras with superinvolution"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> run;

  auto* algebra = app.add_subcommand("algebra", "star algebra construction");
  algebra->require_subcommand(1);
  auto* show = algebra->add_subcommand("show", "components and star table");
  add_spec_flags(show, o);
  add_common_flags(show, o);
  show->callback([&] { run = [&] { return cmd_algebra_show(o); }; });

  auto* check = app.add_subcommand("check-identity", "decide whether a polynomial is an identity");
  add_spec_flags(check, o);
  add_common_flags(check, o);
  check->add_option("--poly", o.poly, "polynomial, e.g. \"z1+ y1+ z2+\"")->required();
  check->callback([&] { run = [&] { return cmd_check_identity(o); }; });

  auto* suite = app.add_subcommand("suite", "identity catalogs");
  suite->require_subcommand(1);
  auto* suite_run = suite->add_subcommand("run", "run a catalog");
  suite_run->add_option("--suite", o.suite, "catalog id");
  add_common_flags(suite_run, o);
  suite_run->callback([&] { run = [&] { return cmd_suite_run(o); }; });
  auto* suite_list = suite->add_subcommand("list", "list catalog ids");
  suite_list->add_flag("--json", o.json, "emit JSON");
  suite_list->callback([&] { run = [&] { return cmd_suite_list(o); }; });
  auto* suite_export = suite->add_subcommand("export", "write generated catalogs");
  suite_export->add_option("--out", o.out, "directory (default: the catalog directory)");
  suite_export->callback([&] { run = [&] { return cmd_suite_export(o); }; });

  auto* codim = app.add_subcommand("codim", "codimension table for degrees 1..max-degree");
  add_spec_flags(codim, o);
  add_common_flags(codim, o);
  codim->add_option("--max-degree", o.max_degree, "largest degree")->capture_default_str();
  codim->add_flag("--check-closed-form", o.check_closed_form, "exit 1 unless totals and case sums match");
  codim->callback([&] { run = [&] { return cmd_codim(o); }; });

  auto* image = app.add_subcommand("image", "images of multilinear polynomials");
  image->require_subcommand(1);
  auto* classify = image->add_subcommand("classify", "image on UT3(010, super-reflection)");
  classify->add_option("--poly", o.poly, "polynomial")->required();
  classify->add_flag("--validate", o.validate, "check against --trials samples and find basis witnesses");
  classify->add_option("--trials", o.trials, "samples")->capture_default_str();
  add_common_flags(classify, o);
  classify->callback([&] { run = [&] { return cmd_image_classify(o); }; });
  auto* member = image->add_subcommand("member", "is the target in the image");
  add_spec_flags(member, o);
  add_common_flags(member, o);
  member->add_option("--poly", o.poly, "polynomial")->required();
  member->add_option("--target", o.target, "matrix, e.g. \"e12 + e23\"")->required();
  member->add_option("--trials", o.trials, "search trials")->capture_default_str();
  member->callback([&] { run = [&] { return cmd_image_member(o); }; });
  auto* probe = image->add_subcommand("probe", "is the image a vector space");
  add_spec_flags(probe, o);
  add_common_flags(probe, o);
  probe->add_option("--poly", o.poly, "polynomial")->required();
  probe->add_option("--trials", o.trials, "samples")->capture_default_str();
  probe->callback([&] { run = [&] { return cmd_image_probe(o); }; });
  auto* counter = image->add_subcommand("counterexample", "y+ z+ on UT_n, n >= 4");
  counter->add_option("--n", o.n, "matrix size")->capture_default_str();
  add_common_flags(counter, o);
  counter->callback([&] { run = [&] { return cmd_image_counterexample(o); }; });

  auto* lemmas = app.add_subcommand("lemmas", "structure lemmas on UT3(010, super-reflection)");
  lemmas->require_subcommand(1);
  auto* lverify = lemmas->add_subcommand("verify", "check the closed forms");
  lverify->add_option("--l-max", o.l_max, "largest number of symmetric letters")->capture_default_str();
  lverify->add_option("--k-max", o.k_max, "largest number of skew letters")->capture_default_str();
  add_common_flags(lverify, o);
  lverify->callback([&] { run = [&] { return cmd_lemmas_verify(o); }; });

  auto* vcert = app.add_subcommand("verify-certificate", "re-check a certificate file");
  vcert->add_option("file", o.file, "certificate or image report JSON")->required();
  add_common_flags(vcert, o);
  vcert->callback([&] { run = [&] { return cmd_verify_certificate(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
}
