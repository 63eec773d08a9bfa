#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "canring/conelattice.hpp"
#include "canring/errors.hpp"
#include "canring/presentation.hpp"
#include "canring/ratapprox.hpp"
#include "canring/twopoint.hpp"
#include "oracles.hpp"

using namespace canring;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

Fraction F(const char* s) { return Fraction::parse(s); }

std::vector<Fraction> alphas(std::initializer_list<const char*> xs) {
  std::vector<Fraction> a;
  for (auto x : xs) a.push_back(F(x));
  return a;
}

std::vector<PointP1> points(std::initializer_list<const char*> xs) {
  std::vector<PointP1> out;
  for (auto x : xs) out.push_back(PointP1::parse(x));
  return out;
}

std::string join(const std::vector<Fraction>& a) {
  std::string s;
  for (const auto& x : a) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

// Every engine presentation passes through here so the Hilbert-series check
// covers all of them.
long engine_runs = 0;
std::vector<std::string> hilbert_failures;

Presentation present(const QDivisor& D, const FieldSpec& field, PresentationOptions opt = {}) {
  auto p = compute_presentation(D, field, opt);
  ++engine_runs;
  if (D.degree().sign() > 0 && opt.relations && !p.complete) hilbert_failures.push_back(join(D.alphas()));
  return p;
}

std::vector<Fraction> random_alphas(std::mt19937_64& rng, std::size_t n, long max_den) {
  for (;;) {
    std::vector<Fraction> a;
    for (std::size_t i = 0; i < n; ++i) {
      const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
      const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(4 * den + 1)) - 2 * den;
      a.push_back(Fraction(num, den));
    }
    Fraction deg(0);
    for (const auto& x : a) deg += x;
    if (deg.sign() > 0) return a;
  }
}

std::set<std::pair<long, long>> lattice_points(const std::vector<GeneratorRecord>& gens) {
  std::set<std::pair<long, long>> out;
  for (const auto& g : gens) out.emplace(g.degree, g.monomial.c[1]);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto div = QDivisor::from_alphas(alphas({"13/5"}));
  const auto p = present(div, FieldSpec::rationals());
  o.require(lattice_points(p.generators) == std::set<std::pair<long, long>>{{1, 0}, {1, 1}, {1, 2}, {2, 5}, {5, 13}},
            "generator lattice points differ");
  o.require(p.relations.size() == 6, "relation count " + std::to_string(p.relations.size()));
  const auto tp = two_point_presentation(F("13/5"), F("0"));
  o.require(tp.relations.size() == 6, "closed form relation count");
  o.require(p.relation_degrees() == tp.relation_degrees(), "relation degrees differ from the closed form");
  std::vector<mpz_class> gap;
  for (const auto& r : tp.relations) {
    if (r.j == r.i + 2) {
      gap.push_back(r.a);
      o.require(r.h == r.i + 1 && r.b == 0, "quadratic-gap relation is not a pure power");
    }
  }
  auto cf = minus_continued_fraction(F("13/5"));
  cf.erase(cf.begin());
  o.require(gap == std::vector<mpz_class>{2, 3, 3}, "quadratic-gap exponents");
  o.require(gap == cf, "exponents differ from the minus continued fraction");
  o.require(evaluate_minus_continued_fraction(minus_continued_fraction(F("13/5"))) == F("13/5"), "minus CF round trip");
  if (o.pass) o.detail = "5 generators, 6 relations, exponents (2,3,3)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto tp = two_point_presentation(F("13/5"), F("-1/4"));
  std::set<std::pair<long, long>> closed;
  for (const auto& v : tp.generators) closed.emplace(to_long(v.d), to_long(v.c));
  o.require(closed == std::set<std::pair<long, long>>{{4, 1}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {2, 5}, {5, 13}},
            "closed form generators differ from the figure");
  o.require(verify_presentation(tp), "closed form relations do not balance");
  const auto p = present(QDivisor::from_alphas(alphas({"13/5", "-1/4"})), FieldSpec::rationals());
  o.require(lattice_points(p.generators) == closed, "engine generators differ from the closed form");
  o.require(p.generator_degrees() == tp.generator_degrees() && p.relation_degrees() == tp.relation_degrees(),
            "engine degrees differ on (13/5,-1/4)");
  std::mt19937_64 rng(2024);
  int tested = 0;
  while (tested < 30) {
    const Fraction a = oracle::random_fraction(rng, 40, 2), b = oracle::random_fraction(rng, 40, 2);
    if ((a + b).sign() <= 0) continue;
    ++tested;
    const auto t = two_point_presentation(a, b);
    o.require(verify_presentation(t), "balance fails for (" + a.str() + "," + b.str() + ")");
    const auto e = present(QDivisor::from_alphas({a, b}), FieldSpec::rationals());
    o.require(e.generator_degrees() == t.generator_degrees() && e.relation_degrees() == t.relation_degrees(),
              "degree multisets differ for (" + a.str() + "," + b.str() + ")");
  }
  if (o.pass) o.detail = "7 generators, 15 relations, 30 random two-point divisors agree";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto div = QDivisor(points({"inf", "0", "1"}), alphas({"-1/2", "1/3", "1/5"}));
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    const auto p = present(div, field);
    const std::string tag = " over " + field.str();
    o.require(p.generator_degrees() == std::vector<long>{6, 10, 15}, "generator degrees" + tag);
    if (p.relations.size() != 1 || p.generator_degrees().size() != 3) {
      o.require(false, "relation count" + tag);
      continue;
    }
    const auto& rel = p.relations[0];
    o.require(rel.degree == 30, "relation degree" + tag);
    std::set<std::vector<long>> support;
    for (const auto& t : rel.terms) {
      if (t.coefficient.sign() != 0) support.insert(t.exponents);
    }
    o.require(support == std::set<std::vector<long>>{{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}, "relation support" + tag);
  }
  if (o.pass) o.detail = "degrees {6,10,15}, one relation x^5,y^3,z^2 in degree 30 over Q and F_7";
  return o;
}

// True iff every basis monomial of degree e is a sum of two cone lattice
// points of positive degree.
bool splits_in_semigroup(const QDivisor& divisor, long e) {
  const QDivisor D = divisor.with_ghost_point();
  for (const auto& m : monomial_basis(D, e)) {
    bool split = false;
    for (long d1 = 1; d1 < e && !split; ++d1) {
      const auto lo_floor = floor_divisor(D, d1);
      const auto hi_floor = floor_divisor(D, e - d1);
      long lo_sum = 0, hi_sum = 0;
      bool box = true;
      for (std::size_t i = 0; i < D.size(); ++i) {
        const long lo = -lo_floor[i];
        const long hi = m.c[i] + hi_floor[i];
        box = box && lo <= hi;
        lo_sum += lo;
        hi_sum += hi;
      }
      split = box && lo_sum <= 0 && 0 <= hi_sum;
    }
    if (!split) return false;
  }
  return true;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(404);
  long max_gen = 0;
  mpz_class max_cube = 0;
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_alphas(rng, n, 8);
    const auto div = QDivisor::from_alphas(a);
    const std::string tag = " for (" + join(a) + ")";
    const auto bounds = degree_bounds(div);
    const auto dd = denominator_data(div);

    // Generation above the bound: every basis monomial of S_e splits in the
    // semigroup, so S_e is spanned by products of lower degrees.
    const long window = bounds.gen_bound + dd.ell;
    for (long e = bounds.gen_bound; e < window; ++e) {
      o.require(splits_in_semigroup(div, e), "S_" + std::to_string(e) + " not generated in lower degrees" + tag);
    }
    const auto p = present(div, FieldSpec::rationals());
    for (long d : p.generator_degrees()) {
      o.require(d < bounds.gen_bound, "generator degree " + std::to_string(d) + tag);
      max_gen = std::max(max_gen, d);
    }
    o.require(p.complete, "relations not certified complete" + tag);
    for (long d : p.relation_degrees()) o.require(d < bounds.rel_bound, "relation degree " + std::to_string(d) + tag);

    const mpz_class cube = cube_point_count(div);
    const std::size_t rays = dd.ell_i.size();
    Fraction volume(1);
    for (long l : dd.ell_i) volume *= Fraction(l);
    for (std::size_t k = 0; k + 1 < rays; ++k) volume *= dd.deg_D;
    o.require(Fraction(mpz_class(cube + 1)) == volume, "cube count" + tag);
    o.require(cube + rays <= semigroup_count_bound(div), "semigroup count" + tag);
    max_cube = std::max(max_cube, cube);
  }
  if (o.pass) o.detail = "100 divisors within bounds (largest generator degree " + std::to_string(max_gen) +
                        ", largest cube " + max_cube.get_str() + ")";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto two = QDivisor(points({"inf", "0", "1"}), alphas({"2", "0", "0"}));
  const std::vector<GradedMonomial> squares{{1, {0, 0, 0}}, {1, {-2, 2, 0}}, {1, {-2, 0, 2}}};
  o.require(section_space(two, FieldSpec::prime(2), 1, squares).rank == 2, "char 2 rank");
  o.require(section_space(two, FieldSpec::rationals(), 1, squares).rank == 3, "char 0 rank");
  auto configs = random_configs(3, {0, 2, 3, 5}, 10, 55);
  configs.push_back({points({"inf", "0", "1"}), FieldSpec::prime(2)});
  const auto rep = stability_scan(alphas({"2", "0", "0"}), configs);
  o.require(rep.generators_stable, "(2,0,0) generator degrees unstable");
  for (const auto& r : rep.results) {
    o.require(!r.skipped, "config skipped: " + r.skip_reason);
    o.require(r.generator_degrees == std::vector<long>{1, 1, 1}, "degrees differ from {1,1,1}");
  }
  if (o.pass) o.detail = "ranks 2 and 3; 41 configs give {1,1,1}";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto a4 = alphas({"2", "0", "0", "0"});
  for (long num = -6; num <= 6; ++num) {
    for (long den = 1; den <= 3; ++den) {
      const Fraction lambda(num, den);
      if (lambda.sign() == 0 || lambda == Fraction(1)) continue;
      std::vector<PointP1> pts{PointP1::infinity(), PointP1::rational(Fraction(0)), PointP1::rational(Fraction(1)),
                               PointP1::rational(lambda)};
      const std::vector<GradedMonomial> harmonic{{1, {0, 0, 0, 0}}, {1, {-2, 2, 0, 0}}, {1, {-2, 0, 1, 1}}};
      const long rank = section_space(QDivisor(pts, a4), FieldSpec::rationals(), 1, harmonic).rank;
      o.require((rank == 2) == (lambda == Fraction(-1)), "rank " + std::to_string(rank) + " at lambda " + lambda.str());
    }
  }
  auto configs = random_configs(4, {0, 3, 5}, 6, 66);
  configs.insert(configs.begin(), PointConfig{points({"inf", "0", "1", "-1"}), FieldSpec::rationals()});
  const auto rep = stability_scan(a4, configs);
  o.require(rep.generators_stable, "(2,0,0,0) generator degrees unstable");
  o.require(!rep.results[0].skipped && rep.results[0].generator_degrees == rep.results[1].generator_degrees,
            "harmonic configuration differs");
  if (o.pass) o.detail = "rank drops only at lambda = -1; degrees stable there";
  return o;
}

// Chords of the conic t -> (1, t, t^2) through the point pairs. Returns the
// rationals x of small height making chords (p0 p1), (p2 p3), (p4 x) concurrent.
std::vector<Fraction> concurrent_sixth_points(const std::vector<PointP1>& five) {
  auto lift = [](const PointP1& p) -> std::vector<Fraction> {
    if (p.is_infinity()) return {Fraction(0), Fraction(0), Fraction(1)};
    const Fraction t = p.value();
    return {Fraction(1), t, t * t};
  };
  auto cross3 = [](const std::vector<Fraction>& u, const std::vector<Fraction>& v) {
    return std::vector<Fraction>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  };
  auto det3 = [](const std::vector<Fraction>& a, const std::vector<Fraction>& b, const std::vector<Fraction>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
  };
  const auto l1 = cross3(lift(five[0]), lift(five[1]));
  const auto l2 = cross3(lift(five[2]), lift(five[3]));
  std::set<Fraction> out;
  for (long den = 1; den <= 12; ++den) {
    for (long num = -24; num <= 24; ++num) {
      const Fraction x(num, den);
      const auto px = PointP1::rational(x);
      if (std::find(five.begin(), five.end(), px) != five.end()) continue;
      if (det3(l1, l2, cross3(lift(five[4]), lift(px))).sign() == 0) out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

Outcome criterion7() {
  Outcome o;
  const auto chords = alphas({"-1/2", "-1/2", "1/3", "1/3", "1/5", "1/5"});
  const auto five = points({"inf", "0", "1", "-1", "2"});
  const auto solutions = concurrent_sixth_points(five);
  o.require(solutions.size() == 1, "expected one concurrent sixth point, found " + std::to_string(solutions.size()));
  if (!o.pass) return o;
  auto special_pts = five;
  special_pts.push_back(PointP1::rational(solutions[0]));
  const auto special = present(QDivisor(special_pts, chords), FieldSpec::rationals());
  o.require(special.generator_degrees() == std::vector<long>{6, 10, 15, 30}, "concurrent generator degrees");
  o.require(special.relation_degrees() == std::vector<long>{30, 60}, "concurrent relation degrees");
  for (const auto& cfg : random_configs(6, {0}, 5, 77)) {
    const auto p = present(QDivisor(cfg.points, chords), cfg.field);
    o.require(p.generator_degrees() == std::vector<long>{6, 10, 15}, "generic generator degrees");
    o.require(p.relation_degrees() == std::vector<long>{60}, "generic relation degrees");
  }
  if (o.pass) o.detail = "concurrent point " + solutions[0].str() + " gives {6,10,15,30}/{30,60}; 5 generic configs give {6,10,15}/{60}";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8888);
  for (int it = 0; it < 25; ++it) {
    const auto a = random_alphas(rng, 5, 6);
    const auto rep = stability_scan(a, random_configs(5, {0, 2, 3, 5, 7}, 20, 1000 + it));
    for (const auto& r : rep.results) o.require(!r.skipped, "config skipped: " + r.skip_reason);
    o.require(rep.generators_stable, "n = 5 generator degrees unstable for (" + join(a) + ")");
  }
  ScanOptions gb;
  gb.groebner = true;
  for (int it = 0; it < 25; ++it) {
    const auto a = random_alphas(rng, 4, 6);
    const auto rep = stability_scan(a, random_configs(4, {0, 2, 3, 5, 7}, 20, 2000 + it), gb);
    for (const auto& r : rep.results) o.require(!r.skipped, "config skipped: " + r.skip_reason);
    o.require(rep.groebner_stable && rep.generators_stable, "n = 4 leading terms unstable for (" + join(a) + ")");
  }
  if (o.pass) o.detail = "25 five-point and 25 four-point divisors stable over 100 configs each";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(999);
  for (int it = 0; it < 1000; ++it) {
    const Fraction alpha = oracle::random_fraction(rng, 200, 10);
    const auto v = best_lower_approximations(alpha, Fraction(mpz_class(alpha.floor() - 1))).vectors();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) o.require(cross(v[i], v[i + 1]) == 1, "chain not unimodular");
  }
  for (int it = 0; it < 500; ++it) {
    std::vector<Fraction> a;
    for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i) a.push_back(oracle::random_fraction(rng, 8, 2));
    const auto div = QDivisor::from_alphas(a);
    const long d = static_cast<long>(rng() % 61);
    o.require(static_cast<long>(monomial_basis(div, d).size()) == graded_dim(div, d), "basis size at d " + std::to_string(d));
  }
  int oracle_cases = 0;
  const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(5), FieldSpec::prime(7)};
  while (oracle_cases < 50) {
    const auto a = random_alphas(rng, 1 + rng() % 3, 4);
    const auto& field = fields[rng() % fields.size()];
    const auto div = QDivisor::from_alphas(a);
    OracleResult expected;
    try {
      expected = brute_force_oracle(div, field);
    } catch (const Unsupported&) {
      continue;
    } catch (const PointCollision&) {
      continue;
    }
    ++oracle_cases;
    const auto p = present(div, field);
    o.require(p.generator_degrees() == expected.generator_degrees && p.relation_degrees() == expected.relation_degrees,
              "oracle disagrees for (" + join(a) + ") over " + field.str());
  }
  o.require(hilbert_failures.empty(), "Hilbert series not matched for (" +
                                          (hilbert_failures.empty() ? std::string() : hilbert_failures.front()) + ")");
  if (o.pass) {
    o.detail = "1000 chains, 500 bases, 50 oracle instances, Hilbert series matched on " + std::to_string(engine_runs) +
               " engine runs";
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  PresentationOptions opt;
  opt.groebner = true;
  const auto p = present(QDivisor::from_alphas(alphas({"-1/3", "1/2", "1/2"})), FieldSpec::rationals(), opt);
  const std::size_t lts = p.groebner ? p.groebner->leading_terms.size() : 0;
  o.require(p.groebner && p.groebner->complete, "leading terms not certified complete");
  o.require(lts > p.relations.size(), "leading terms " + std::to_string(lts) + " vs relations " +
                                          std::to_string(p.relations.size()));
  if (o.pass) o.detail = std::to_string(lts) + " leading terms, " + std::to_string(p.relations.size()) + " relations";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s (%.1fs) %s\n", k + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
