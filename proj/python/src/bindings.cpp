#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "canring/errors.hpp"
#include "canring/presentation.hpp"
#include "canring/ratapprox.hpp"
#include "canring/twopoint.hpp"

namespace py = pybind11;
using namespace canring;

namespace {

std::vector<Fraction> parse_alphas(const std::vector<std::string>& alphas) {
  std::vector<Fraction> out;
  for (const auto& a : alphas) out.push_back(Fraction::parse(a));
  return out;
}

QDivisor make_divisor(const std::vector<std::string>& alphas, const std::optional<std::vector<std::string>>& points) {
  if (!points) return QDivisor::from_alphas(parse_alphas(alphas));
  std::vector<PointP1> pts;
  for (const auto& p : *points) pts.push_back(PointP1::parse(p));
  return QDivisor(std::move(pts), parse_alphas(alphas));
}

FieldSpec make_field(std::uint64_t characteristic) {
  const FieldSpec f = characteristic == 0 ? FieldSpec::rationals() : FieldSpec::prime(characteristic);
  f.validate();
  return f;
}

std::vector<std::string> strs(const std::vector<Fraction>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

py::dict monomial(const GradedMonomial& m) {
  py::dict d;
  d["d"] = m.d;
  d["c"] = m.c;
  return d;
}

py::list generators(const std::vector<GeneratorRecord>& gens) {
  py::list out;
  for (const auto& g : gens) {
    py::dict d;
    d["degree"] = g.degree;
    d["monomial"] = monomial(g.monomial);
    d["marked_point"] = g.marked_point;
    d["order_at_marked_point"] = g.order_at_marked_point;
    d["section"] = strs(g.section);
    out.append(d);
  }
  return out;
}

py::list relations(const std::vector<RelationPoly>& rels) {
  py::list out;
  for (const auto& r : rels) {
    py::list terms;
    for (const auto& t : r.terms) terms.append(py::make_tuple(t.exponents, t.coefficient.str()));
    py::dict d;
    d["degree"] = r.degree;
    d["terms"] = terms;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_canring, m) {
  m.doc() = "Canonical rings of Q-divisors on P^1";
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PointCollision>(m, "PointCollision", input_error.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_ValueError);

  m.def(
      "minus_continued_fraction",
      [](const std::string& alpha) {
        std::vector<std::string> out;
        for (const auto& q : minus_continued_fraction(Fraction::parse(alpha))) out.push_back(q.get_str());
        return out;
      },
      py::arg("alpha"), "Partial quotients (as strings) of the minus continued fraction of alpha > 0.");

  m.def(
      "graded_dim", [](const std::vector<std::string>& alphas, long d) { return graded_dim(make_divisor(alphas, {}), d); },
      py::arg("alphas"), py::arg("d"), "dim S_d.");

  m.def(
      "degree_bounds",
      [](const std::vector<std::string>& alphas) {
        const auto b = degree_bounds(make_divisor(alphas, {}));
        return py::make_tuple(b.gen_bound, b.rel_bound);
      },
      py::arg("alphas"), "(generator bound, relation bound), both strict.");

  m.def(
      "two_point_presentation",
      [](const std::string& alpha, const std::string& beta) {
        const auto p = two_point_presentation(Fraction::parse(alpha), Fraction::parse(beta));
        py::list gens;
        for (const auto& v : p.generators) gens.append(py::make_tuple(v.d.get_str(), v.c.get_str()));
        py::list rels;
        for (const auto& r : p.relations) {
          py::dict d;
          d["i"] = r.i;
          d["j"] = r.j;
          d["h"] = r.h;
          d["a"] = r.a.get_str();
          d["b"] = r.b.get_str();
          rels.append(d);
        }
        py::dict out;
        out["r"] = p.r;
        out["s"] = p.s;
        out["generators"] = gens;
        out["relations"] = rels;
        out["verified"] = verify_presentation(p);
        return out;
      },
      py::arg("alpha"), py::arg("beta") = "0", "Closed-form presentation for alpha P + beta Q.");

  m.def(
      "minimal_generators",
      [](const std::vector<std::string>& alphas, std::optional<std::vector<std::string>> points,
         std::uint64_t characteristic) {
        return generators(minimal_generators(make_divisor(alphas, points), make_field(characteristic)));
      },
      py::arg("alphas"), py::arg("points") = py::none(), py::arg("characteristic") = 0);

  m.def(
      "presentation",
      [](const std::vector<std::string>& alphas, std::optional<std::vector<std::string>> points,
         std::uint64_t characteristic, bool groebner) {
        PresentationOptions opt;
        opt.groebner = groebner;
        const auto p = compute_presentation(make_divisor(alphas, points), make_field(characteristic), opt);
        py::dict out;
        out["generators"] = generators(p.generators);
        out["generator_degrees"] = p.generator_degrees();
        out["relations"] = relations(p.relations);
        out["relation_degrees"] = p.relation_degrees();
        out["complete"] = p.complete;
        if (p.groebner) {
          py::dict g;
          g["truncation"] = p.groebner->truncation;
          g["complete"] = p.groebner->complete;
          g["leading_terms"] = p.groebner->leading_terms;
          out["groebner"] = g;
        }
        return out;
      },
      py::arg("alphas"), py::arg("points") = py::none(), py::arg("characteristic") = 0, py::arg("groebner") = false,
      "Generators, minimal relations and optionally Groebner leading terms.");

  m.def(
      "brute_force_oracle",
      [](const std::vector<std::string>& alphas, std::optional<std::vector<std::string>> points,
         std::uint64_t characteristic) {
        const auto o = brute_force_oracle(make_divisor(alphas, points), make_field(characteristic));
        return py::make_tuple(o.generator_degrees, o.relation_degrees);
      },
      py::arg("alphas"), py::arg("points") = py::none(), py::arg("characteristic") = 0,
      "(generator degrees, relation degrees) by direct linear algebra.");

  m.def(
      "stability_scan",
      [](const std::vector<std::string>& alphas, const std::vector<std::uint64_t>& characteristics,
         std::size_t per_char, std::uint64_t seed, bool groebner) {
        const auto a = parse_alphas(alphas);
        ScanOptions opt;
        opt.groebner = groebner;
        const auto rep = stability_scan(a, random_configs(a.size(), characteristics, per_char, seed), opt);
        py::list results;
        for (const auto& r : rep.results) {
          py::dict d;
          d["field"] = r.config.field.str();
          std::vector<std::string> pts;
          for (const auto& p : r.config.points) pts.push_back(p.str());
          d["points"] = pts;
          d["skipped"] = r.skipped;
          d["generator_degrees"] = r.generator_degrees;
          results.append(d);
        }
        py::dict out;
        out["results"] = results;
        out["stable"] = rep.stable();
        out["disagreeing"] = rep.disagreeing;
        return out;
      },
      py::arg("alphas"), py::arg("characteristics") = std::vector<std::uint64_t>{0}, py::arg("per_char") = 5,
      py::arg("seed") = 1, py::arg("groebner") = false, "Compare outcomes over seeded random point configurations.");
}
