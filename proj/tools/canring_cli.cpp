#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "canring/conelattice.hpp"
#include "canring/errors.hpp"
#include "canring/presentation.hpp"
#include "canring/twopoint.hpp"

using namespace canring;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUnstable = 2;
constexpr int kInternal = 3;

struct Job {
  std::string divisor_file;
  std::string alphas_csv;
  std::string points_csv;
  std::optional<std::uint64_t> characteristic;
  std::optional<long> max_degree;
  std::uint64_t seed = 1;
  std::size_t configs = 10;
  std::string chars_csv = "0";
  std::optional<long> truncation;
  bool json_out = false;
  bool pretty = false;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

std::string string_field(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " entries must be strings");
  return j.get<std::string>();
}

struct Input {
  QDivisor divisor;
  FieldSpec field;
};

Input read_input(const Job& job) {
  std::vector<Fraction> alphas;
  std::vector<PointP1> points;
  std::uint64_t ch = 0;
  if (!job.divisor_file.empty()) {
    if (!job.alphas_csv.empty() || !job.points_csv.empty()) throw InputError("use either --divisor or --alphas/--points");
    std::ifstream in(job.divisor_file);
    if (!in) throw InputError("cannot read " + job.divisor_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("divisor file: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("divisor file must hold a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key != "points" && key != "alphas" && key != "char") throw InputError("unknown key \"" + key + "\"");
    }
    if (!doc.contains("alphas") || !doc["alphas"].is_array()) throw InputError("\"alphas\" must be an array");
    for (const auto& a : doc["alphas"]) alphas.push_back(Fraction::parse(string_field(a, "alphas")));
    if (doc.contains("points")) {
      if (!doc["points"].is_array()) throw InputError("\"points\" must be an array");
      for (const auto& p : doc["points"]) points.push_back(PointP1::parse(string_field(p, "points")));
    }
    if (doc.contains("char")) {
      if (!doc["char"].is_number_unsigned()) throw InputError("\"char\" must be 0 or a prime");
      ch = doc["char"].get<std::uint64_t>();
    }
  } else {
    if (job.alphas_csv.empty()) throw InputError("give --divisor FILE or --alphas CSV");
    for (const auto& a : split_csv(job.alphas_csv)) alphas.push_back(Fraction::parse(a));
    if (!job.points_csv.empty()) {
      for (const auto& p : split_csv(job.points_csv)) points.push_back(PointP1::parse(p));
    }
  }
  if (job.characteristic) ch = *job.characteristic;
  const FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::prime(ch);
  field.validate();
  if (points.empty()) return {QDivisor::from_alphas(std::move(alphas)), field};
  return {QDivisor(std::move(points), std::move(alphas)), field};
}

json fractions(const std::vector<Fraction>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json divisor_json(const QDivisor& D, const FieldSpec& field) {
  json pts = json::array();
  for (const auto& p : D.points()) pts.push_back(p.str());
  return {{"points", pts}, {"alphas", fractions(D.alphas())}, {"field", field.str()}};
}

json monomial_json(const GradedMonomial& m) { return {{"d", m.d}, {"c", m.c}}; }

json generators_json(const std::vector<GeneratorRecord>& gens) {
  json out = json::array();
  for (const auto& g : gens) {
    out.push_back({{"degree", g.degree},
                   {"monomial", monomial_json(g.monomial)},
                   {"marked_point", g.marked_point},
                   {"order_at_marked_point", g.order_at_marked_point},
                   {"section", fractions(g.section)}});
  }
  return out;
}

json relations_json(const std::vector<RelationPoly>& rels) {
  json out = json::array();
  for (const auto& r : rels) {
    json terms = json::array();
    for (const auto& t : r.terms) terms.push_back({{"exponents", t.exponents}, {"coefficient", t.coefficient.str()}});
    out.push_back({{"degree", r.degree}, {"support_size", r.support_size()}, {"terms", terms}});
  }
  return out;
}

json groebner_json(const GroebnerReport& g) {
  return {{"order", g.order},
          {"truncation", g.truncation},
          {"complete", g.complete},
          {"leading_terms", g.leading_terms},
          {"leading_term_degrees", g.leading_term_degrees}};
}

std::string degrees_str(const std::vector<long>& ds) {
  std::string s;
  for (long d : ds) s += (s.empty() ? "" : " ") + std::to_string(d);
  return s.empty() ? "(none)" : s;
}

void emit(const Job& job, const json& report, const std::string& summary) {
  if (job.pretty) {
    std::cout << report.dump(2) << "\n";
  } else if (job.json_out) {
    std::cout << report.dump() << "\n";
  } else {
    std::cout << summary;
  }
}

int cmd_dims(const Job& job) {
  const auto in = read_input(job);
  const long top = job.max_degree.value_or(30);
  if (top < 0) throw InputError("--max-degree must be >= 0");
  json rows = json::array();
  std::ostringstream text;
  text << "d  dim S_d\n";
  for (long d = 0; d <= top; ++d) {
    const long dim = graded_dim(in.divisor, d);
    rows.push_back({{"d", d}, {"dim", dim}});
    text << d << "  " << dim << "\n";
  }
  emit(job, {{"divisor", divisor_json(in.divisor, in.field)}, {"dims", rows}}, text.str());
  return kOk;
}

int cmd_twopoint(const Job& job) {
  const auto in = read_input(job);
  if (in.divisor.size() > 2) throw InputError("twopoint needs at most two points");
  const Fraction alpha = in.divisor.alpha(0);
  const Fraction beta = in.divisor.size() == 2 ? in.divisor.alpha(1) : Fraction(0);
  const auto p = two_point_presentation(alpha, beta);
  if (!verify_presentation(p)) throw InternalError("two-point relations do not balance");
  json gens = json::array();
  for (const auto& v : p.generators) gens.push_back({v.d.get_str(), v.c.get_str()});
  json rels = json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"i", r.i}, {"j", r.j}, {"h", r.h}, {"a", r.a.get_str()}, {"b", r.b.get_str()}});
  }
  const char* kind = p.kind == RingKind::trivial ? "trivial" : p.kind == RingKind::polynomial ? "polynomial" : "general";
  const json report{{"alpha", alpha.str()}, {"beta", beta.str()}, {"kind", kind}, {"r", p.r}, {"s", p.s},
                    {"index_offset", -p.s}, {"generators", gens}, {"relations", rels}};
  std::ostringstream text;
  text << "kind " << kind << ", r = " << p.r << ", s = " << p.s << "\n";
  for (long i = -p.s; i <= p.r; ++i) text << "v_" << i << " = (" << p.generator(i).d << ", " << p.generator(i).c << ")\n";
  for (const auto& r : p.relations) {
    text << "f_" << r.i << " f_" << r.j << " = f_" << r.h << "^" << r.a;
    if (r.b != 0) text << " f_" << r.h + 1 << "^" << r.b;
    text << "\n";
  }
  emit(job, report, text.str());
  return kOk;
}

int cmd_gens(const Job& job) {
  const auto in = read_input(job);
  const auto gens = minimal_generators(in.divisor, in.field, job.max_degree);
  std::vector<long> degrees;
  for (const auto& g : gens) degrees.push_back(g.degree);
  emit(job, {{"divisor", divisor_json(in.divisor, in.field)}, {"generators", generators_json(gens)}},
       "generator degrees: " + degrees_str(degrees) + "\n");
  return kOk;
}

int cmd_rels(const Job& job) {
  const auto in = read_input(job);
  PresentationOptions opt;
  opt.relation_bound = job.max_degree;
  const auto p = compute_presentation(in.divisor, in.field, opt);
  const json report{{"divisor", divisor_json(in.divisor, in.field)},
                    {"generators", generators_json(p.generators)},
                    {"relations", relations_json(p.relations)},
                    {"checked_through", p.hilbert_checked_through},
                    {"complete", p.complete}};
  emit(job, report,
       "generator degrees: " + degrees_str(p.generator_degrees()) + "\nrelation degrees: " +
           degrees_str(p.relation_degrees()) + "\n" + (p.complete ? "complete" : "not certified complete") +
           " through degree " + std::to_string(p.hilbert_checked_through) + "\n");
  return kOk;
}

int cmd_groebner(const Job& job) {
  const auto in = read_input(job);
  PresentationOptions opt;
  opt.groebner = true;
  opt.truncation = job.truncation;
  const auto p = compute_presentation(in.divisor, in.field, opt);
  const auto& g = *p.groebner;
  emit(job,
       {{"divisor", divisor_json(in.divisor, in.field)},
        {"generator_degrees", p.generator_degrees()},
        {"groebner", groebner_json(g)}},
       std::to_string(g.leading_terms.size()) + " leading terms in degrees " + degrees_str(g.leading_term_degrees) +
           "\ntruncation " + std::to_string(g.truncation) + (g.complete ? ", complete\n" : ", not certified complete\n"));
  return kOk;
}

int cmd_scan(const Job& job) {
  const auto in = read_input(job);
  std::vector<std::uint64_t> chars;
  for (const auto& c : split_csv(job.chars_csv)) {
    try {
      chars.push_back(std::stoull(c));
    } catch (const std::exception&) {
      throw InputError("bad characteristic \"" + c + "\"");
    }
  }
  std::vector<PointConfig> configs{{in.divisor.points(), in.field}};
  for (auto& c : random_configs(in.divisor.size(), chars, job.configs, job.seed)) configs.push_back(std::move(c));
  ScanOptions opt;
  opt.groebner = job.truncation.has_value();
  opt.truncation = job.truncation;
  const auto rep = stability_scan(in.divisor.alphas(), configs, opt);

  json results = json::array();
  std::ostringstream text;
  for (std::size_t k = 0; k < rep.results.size(); ++k) {
    const auto& r = rep.results[k];
    json pts = json::array();
    for (const auto& p : r.config.points) pts.push_back(p.str());
    json entry{{"config", {{"index", k}, {"points", pts}, {"field", r.config.field.str()}}}, {"skipped", r.skipped}};
    if (r.skipped) {
      entry["skip_reason"] = r.skip_reason;
    } else {
      json gens = json::array();
      for (std::size_t i = 0; i < r.generator_degrees.size(); ++i) {
        gens.push_back({{"degree", r.generator_degrees[i]}, {"monomial", monomial_json(r.generator_monomials[i])}});
      }
      entry["generators"] = gens;
      if (r.leading_terms) entry["groebner"] = {{"leading_terms", *r.leading_terms}};
    }
    results.push_back(entry);
    text << k << " " << r.config.field.str() << " ";
    if (r.skipped) {
      text << "skipped: " << r.skip_reason << "\n";
    } else {
      text << "degrees " << degrees_str(r.generator_degrees) << "\n";
    }
  }
  json report{{"alphas", fractions(rep.alphas)},
              {"seed", job.seed},
              {"results", results},
              {"generators_stable", rep.generators_stable},
              {"groebner_stable", rep.groebner_stable},
              {"disagreeing", rep.disagreeing},
              {"stable", rep.stable()}};
  if (rep.xgen_threshold) report["xgen_threshold"] = *rep.xgen_threshold;
  text << (rep.stable() ? "stable" : "UNSTABLE");
  if (!rep.disagreeing.empty()) {
    text << ", disagreeing configs:";
    for (auto k : rep.disagreeing) text << " " << k;
  }
  text << "\n";
  emit(job, report, text.str());
  return rep.stable() ? kOk : kUnstable;
}

int cmd_oracle(const Job& job) {
  const auto in = read_input(job);
  const auto o = brute_force_oracle(in.divisor, in.field);
  const auto p = compute_presentation(in.divisor, in.field);
  const bool match = o.generator_degrees == p.generator_degrees() && o.relation_degrees == p.relation_degrees();
  emit(job,
       {{"divisor", divisor_json(in.divisor, in.field)},
        {"engine", {{"generator_degrees", p.generator_degrees()}, {"relation_degrees", p.relation_degrees()}}},
        {"oracle", {{"generator_degrees", o.generator_degrees}, {"relation_degrees", o.relation_degrees}}},
        {"match", match}},
       std::string(match ? "MATCH" : "MISMATCH") + "\ngenerator degrees: " + degrees_str(o.generator_degrees) +
           "\nrelation degrees: " + degrees_str(o.relation_degrees) + "\n");
  return match ? kOk : kInternal;
}

int guarded(const std::function<int()>& run) {
  try {
    return run();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const PointCollision& e) {
    std::cerr << "point collision: " << e.what() << "\n";
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators and relations of canonical rings of Q-divisors on P^1"};
  app.require_subcommand(1);
  Job job;
  int status = kOk;

  auto add_common = [&](CLI::App* sub) {
    auto* file = sub->add_option("--divisor", job.divisor_file, "divisor JSON file");
    sub->add_option("--alphas", job.alphas_csv, "comma-separated coefficients")->excludes(file);
    sub->add_option("--points", job.points_csv, "comma-separated points (inf, num/den, g^e)")->excludes(file);
    sub->add_option("--char", job.characteristic, "field characteristic (0 for Q)");
    sub->add_flag("--json", job.json_out, "compact JSON output");
    sub->add_flag("--pretty", job.pretty, "indented JSON output");
  };
  auto add = [&](const char* name, const char* help, int (*fn)(const Job&)) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    sub->callback([&, fn] { status = guarded([&] { return fn(job); }); });
    return sub;
  };

  add("dims", "dimensions of the graded pieces", cmd_dims)->add_option("--max-degree", job.max_degree, "last degree (default 30)");
  add("twopoint", "closed-form presentation for at most two points", cmd_twopoint);
  add("gens", "minimal generators", cmd_gens)->add_option("--max-degree", job.max_degree, "search degrees below this");
  add("rels", "minimal relations", cmd_rels)->add_option("--max-degree", job.max_degree, "search degrees through this");
  add("groebner", "leading terms of the relation ideal", cmd_groebner)
      ->add_option("--truncation", job.truncation, "last degree searched");
  auto* scan = add("scan", "stability scan over point configurations", cmd_scan);
  scan->add_option("--seed", job.seed, "seed for the random configurations");
  scan->add_option("--configs", job.configs, "random configurations per characteristic");
  scan->add_option("--chars", job.chars_csv, "comma-separated characteristics (default 0)");
  scan->add_option("--truncation", job.truncation, "also compare leading terms through this degree");
  add("oracle", "compare the engine with the brute-force oracle", cmd_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  return status;
}
