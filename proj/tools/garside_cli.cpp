// Command-line front end: validate / analyze / nf / wp / derive / enumerate.
// Reports are JSON on stdout. Exit codes: 0 ok, 1 clean negative verdict,
// 2 structural or usage error.

#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/garside.hpp"

using namespace garside;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json names(const GermTable& t, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (auto g : ids) out.push_back(t.name(g));
  return out;
}

Json axioms_json(const GermTable& t, const AxiomReport& r, bool full) {
  Json j;
  j["valid"] = r.valid;
  j["endpoints"] = r.endpoints_ok;
  j["identities"] = r.identities_ok;
  j["associativity"] = r.associativity_ok;
  if (full) {
    j["left_associative"] = r.left_associative;
    j["right_associative"] = r.right_associative;
    j["left_cancellative"] = r.left_cancellative;
    j["right_cancellative"] = r.right_cancellative;
    j["invertibles"] = names(t, r.invertibles);
    j["atoms"] = names(t, r.atoms);
  }
  Json ce = Json::array();
  for (const auto& w : r.counterexamples) {
    ce.push_back({{"property", std::string(to_string(w.property))}, {"witness", names(t, w.elements)}});
  }
  j["counterexamples"] = ce;
  return j;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

PathWord parse_word(const GermTable& t, const std::string& csv, const std::optional<std::string>& object) {
  std::vector<ElementId> ids;
  for (const auto& n : split_csv(csv)) {
    auto id = t.find_element(n);
    if (!id) throw PreconditionError("unknown element name '" + n + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) {
    if (!object) throw PreconditionError("empty word needs --object");
    auto x = t.find_object(*object);
    if (!x) throw PreconditionError("unknown object '" + *object + "'");
    return PathWord::empty(*x);
  }
  auto w = PathWord::of(t, ids);
  if (object && t.object_name(w.source()) != *object) {
    throw PreconditionError("word starts at '" + t.object_name(w.source()) + "', not '" + *object + "'");
  }
  return w;
}

Json verdict_json(const GermTable& t, const GarsideVerdict& v) {
  Json j;
  j["is_garside"] = v.is_garside;
  if (v.failed_criterion) {
    j["failed_criterion"] = std::string(to_string(*v.failed_criterion));
    j["witness"] = names(t, v.witness);
  }
  return j;
}

Json optional_witness(const GermTable& t, const std::optional<std::vector<ElementId>>& w) {
  return w ? names(t, *w) : Json(nullptr);
}

Json witness_or_null(const GermTable& t, const std::vector<ElementId>& w) {
  return w.empty() ? Json(nullptr) : names(t, w);
}

// Broken identity rows or endpoints make the table malformed rather than
// a germ that fails a property, so they count as structural errors.
int invalid_exit_code(const AxiomReport& r) {
  return r.endpoints_ok && r.identities_ok ? kNegative : kError;
}

void emit(Json& report, const Stopwatch& clock) {
  report["timings"] = {{"total_ms", clock.ms()}};
  std::cout << report.dump(2) << "\n";
}

int cmd_validate(const std::string& path) {
  Stopwatch clock;
  Json report{{"command", "validate"}, {"file", path}};
  const auto t = load_germ(path);
  const auto r = axiom_report(t);
  report["objects"] = t.num_objects();
  report["elements"] = t.num_elements();
  report["axioms"] = axioms_json(t, r, r.valid);
  emit(report, clock);
  return r.valid ? kOk : invalid_exit_code(r);
}

int cmd_analyze(const std::string& path, bool laws, bool noetherian) {
  Stopwatch clock;
  Json report{{"command", "analyze"}, {"file", path}};
  const auto t = load_germ(path);
  report["objects"] = t.num_objects();
  report["elements"] = t.num_elements();
  const auto axioms = axiom_report(t);
  report["axioms"] = axioms_json(t, axioms, axioms.valid);
  if (!axioms.valid) {
    report["verdict"] = {{"is_garside", false}, {"failed_criterion", "invalid-germ"}};
    emit(report, clock);
    return invalid_exit_code(axioms);
  }
  Stopwatch verdict_clock;
  const auto v = is_garside_germ(t);
  report["verdict"] = verdict_json(t, v);
  report["is_garside"] = v.is_garside;
  const double verdict_ms = verdict_clock.ms();
  if (laws) {
    Json l;
    if (v.j_table) {
      const auto r = verify_laws(t, *v.j_table);
      l = {{"j_function", r.j_function},
           {"sharp_j_law", r.sharp_j_law},
           {"sharp_i_law", r.sharp_i_law},
           {"sharp_h_law", r.sharp_h_law},
           {"triples_checked", r.triples_checked},
           {"j_law_witness", optional_witness(t, r.j_law_witness)},
           {"i_law_witness", optional_witness(t, r.i_law_witness)},
           {"h_law_witness", optional_witness(t, r.h_law_witness)},
           {"h_law_scope", "S and S² inputs"}};
    } else {
      l = {{"skipped", "no maximum J-function"}};
    }
    report["laws"] = l;
  }
  if (noetherian) {
    const auto n = noetherian_report(t);
    report["noetherian"] = {{"left", n.left_noetherian},
                            {"right", n.right_noetherian},
                            {"left_cycle", witness_or_null(t, n.left_cycle)},
                            {"right_cycle", witness_or_null(t, n.right_cycle)}};
    const auto c = lcm_criteria(t);
    report["lcm"] = {{"j_sets_admit_common_multiples", c.j_sets_admit_common_multiples},
                     {"common_multiple_witness", witness_or_null(t, c.common_multiple_witness)},
                     {"local_right_lcms", c.local_right_lcms},
                     {"local_lcm_witness", witness_or_null(t, c.local_lcm_witness)},
                     {"right_lcms", c.right_lcms},
                     {"lcm_witness", witness_or_null(t, c.lcm_witness)},
                     {"lcm_closure", c.lcm_closure},
                     {"closure_witness", witness_or_null(t, c.closure_witness)},
                     {"noetherian_criterion_garside", c.noetherian_criterion_garside},
                     {"local_lcm_package", c.local_lcm_package},
                     {"lcm_package", c.lcm_package}};
  }
  report["timings"] = {{"verdict_ms", verdict_ms}};
  report["timings"]["total_ms"] = clock.ms();
  std::cout << report.dump(2) << "\n";
  return v.is_garside ? kOk : kNegative;
}

// Returns the engine, or writes the refusal into the report and returns
// empty. Callers treat a refusal as an error: these commands need a
// Garside germ.
std::optional<CategoryEngine> engine_for(const GermTable& t, Json& report) {
  const auto axioms = validate_germ(t);
  if (!axioms.valid) {
    report["verdict"] = {{"is_garside", false}, {"failed_criterion", "invalid-germ"}};
    report["error"] = "germ axioms fail";
    return std::nullopt;
  }
  auto v = is_garside_germ(t);
  if (!v.is_garside) {
    report["verdict"] = verdict_json(t, v);
    report["error"] = "germ is not Garside";
    return std::nullopt;
  }
  return CategoryEngine(t, v);
}

int cmd_nf(const std::string& path, const std::string& csv, const std::optional<std::string>& object) {
  Stopwatch clock;
  Json report{{"command", "nf"}, {"file", path}};
  const auto t = load_germ(path);
  const auto w = parse_word(t, csv, object);
  auto eng = engine_for(t, report);
  if (!eng) {
    emit(report, clock);
    return kError;
  }
  const auto nf = eng->normal_form(w);
  report["word"] = names(t, w.entries());
  report["normal_form"] = names(t, nf.entries());
  report["s_length"] = eng->s_length(nf);
  report["source"] = t.object_name(nf.source());
  emit(report, clock);
  return kOk;
}

int cmd_wp(const std::string& path, const std::string& a, const std::string& b,
           const std::optional<std::string>& object) {
  Stopwatch clock;
  Json report{{"command", "wp"}, {"file", path}};
  const auto t = load_germ(path);
  const auto w1 = parse_word(t, a, object);
  const auto w2 = parse_word(t, b, object);
  auto eng = engine_for(t, report);
  if (!eng) {
    emit(report, clock);
    return kError;
  }
  const bool equal = eng->word_problem(w1, w2);
  report["equal"] = equal;
  report["normal_forms"] = {names(t, eng->normal_form(w1).entries()), names(t, eng->normal_form(w2).entries())};
  emit(report, clock);
  return equal ? kOk : kNegative;
}

int cmd_derive(const std::string& family, unsigned rank, const std::string& flavor, const std::string& order,
               const std::string& out) {
  Stopwatch clock;
  Json report{{"command", "derive"}, {"family", family}, {"rank", rank}, {"flavor", flavor}};
  CoxeterSpec spec{};
  if (family == "A") {
    spec = {CoxeterFamily::A, rank};
  } else if (family == "B") {
    spec = {CoxeterFamily::B, rank};
  } else if (family == "I2") {
    spec = {CoxeterFamily::I2, rank};
  } else {
    throw UnsupportedSpecError("unsupported family '" + family + "' (expected A, B or I2)");
  }
  std::optional<GermTable> t;
  if (flavor == "classical") {
    if (!order.empty()) throw PreconditionError("--coxeter-order applies to dual germs only");
    t = classical_germ(spec);
  } else if (flavor == "dual") {
    std::optional<std::vector<std::size_t>> ord;
    if (!order.empty()) {
      ord.emplace();
      for (const auto& s : split_csv(order)) {
        std::size_t k = 0;
        try {
          k = std::stoul(s);
        } catch (const std::exception&) {
          throw PreconditionError("--coxeter-order entries are 1-based generator numbers, got '" + s + "'");
        }
        if (k == 0) throw PreconditionError("--coxeter-order entries are 1-based generator numbers");
        ord->push_back(k - 1);
      }
    }
    t = dual_germ(spec, ord);
  } else {
    throw PreconditionError("unknown flavor '" + flavor + "' (expected classical or dual)");
  }
  save_germ(*t, out);
  report["output"] = out;
  report["elements"] = t->num_elements();
  report["is_garside"] = true;
  emit(report, clock);
  return kOk;
}

int cmd_enumerate(const std::string& path, std::size_t max_k, std::size_t limit) {
  Stopwatch clock;
  Json report{{"command", "enumerate"}, {"file", path}, {"max", max_k}};
  const auto t = load_germ(path);
  auto eng = engine_for(t, report);
  if (!eng) {
    emit(report, clock);
    return kError;
  }
  // Elements are reached by left-multiplying known normal forms by germ
  // letters; s_length never decreases, so anything beyond max is dropped.
  std::set<std::vector<ElementId>> seen;
  std::vector<NormalForm> frontier;
  std::vector<std::size_t> counts(max_k + 1, 0);
  for (std::size_t x = 0; x < t.num_objects(); ++x) {
    auto e = eng->normal_form(PathWord::empty(ObjectId{x}));
    seen.insert(e.entries());
    ++counts[0];
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<NormalForm> next;
    for (const auto& nf : frontier) {
      for (std::size_t g = 0; g < t.num_elements(); ++g) {
        const ElementId f{g};
        if (t.target(f) != nf.source()) continue;
        auto m = eng->left_multiply(f, nf);
        const auto len = eng->s_length(m);
        if (len > max_k) continue;
        if (!seen.insert(m.entries()).second) continue;
        // Empty words at different objects share the key; only non-empty
        // normal forms reach this point.
        ++counts[len];
        if (seen.size() > limit) {
          throw DiagnosticError("enumeration exceeded " + std::to_string(limit) + " elements; lower --max");
        }
        next.push_back(std::move(m));
      }
    }
    frontier = std::move(next);
  }
  report["counts"] = counts;
  emit(report, clock);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside germs: validation, analysis, normal forms and Coxeter-derived germs"};
  app.require_subcommand(1);

  std::string file, word, word2, family, flavor, order, out;
  std::optional<std::string> object;
  bool laws = false, noeth = false;
  unsigned rank = 0;
  std::size_t max_k = 0, limit = 2000000;

  auto* validate = app.add_subcommand("validate", "check the germ axioms");
  validate->add_option("file", file, "germ file")->required();

  auto* analyze = app.add_subcommand("analyze", "decide the Garside property");
  analyze->add_option("file", file, "germ file")->required();
  analyze->add_flag("--laws", laws, "verify the sharp I/J/H laws");
  analyze->add_flag("--noetherian", noeth, "report Noetherianity and lcm criteria");

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("file", file, "germ file")->required();
  nf->add_option("--word", word, "comma-separated element names")->required();
  nf->add_option("--object", object, "object of an empty word");

  auto* wp = app.add_subcommand("wp", "word problem");
  wp->add_option("file", file, "germ file")->required();
  wp->add_option("word1", word, "comma-separated element names")->required();
  wp->add_option("word2", word2, "comma-separated element names")->required();
  wp->add_option("--object", object, "object of empty words");

  auto* derive = app.add_subcommand("derive", "write a classical or dual Coxeter germ");
  derive->add_option("--family", family, "A, B or I2")->required();
  derive->add_option("--rank", rank, "points (A), signed points (B) or m (I2)")->required();
  derive->add_option("--flavor", flavor, "classical or dual")->required();
  derive->add_option("--coxeter-order", order, "1-based order of simple reflections in c (dual)");
  derive->add_option("-o,--output", out, "output germ file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "count elements by S-length");
  enumerate->add_option("file", file, "germ file")->required();
  enumerate->add_option("--max", max_k, "largest S-length")->required();
  enumerate->add_option("--limit", limit, "abort after this many elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*analyze) return cmd_analyze(file, laws, noeth);
    if (*nf) return cmd_nf(file, word, object);
    if (*wp) return cmd_wp(file, word, word2, object);
    if (*derive) return cmd_derive(family, rank, flavor, order, out);
    if (*enumerate) return cmd_enumerate(file, max_k, limit);
  } catch (const Error& e) {
    Json report{{"error", e.what()}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
