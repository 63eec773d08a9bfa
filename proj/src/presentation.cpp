#include "canring/presentation.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "canring/exactla.hpp"
#include "engine.hpp"
#include "hilbert.hpp"

namespace canring {

namespace {

template <ExactField F>
typename F::value_type from_coefficient(const F&, const Fraction& f) {
  if constexpr (F::fraction_free) {
    return f.value();
  } else {
    if (!f.is_integer() || f.sign() < 0) throw InputError("coefficient " + f.str() + " is not a field encoding");
    return static_cast<typename F::value_type>(f.num().get_ui());
  }
}

template <ExactField F>
std::vector<Fraction> to_fractions(const F& field, const Vec<F>& v) {
  std::vector<Fraction> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(detail::to_fraction(field, x));
  return out;
}

template <ExactField F>
GeneratorRecord to_record(const F& field, const typename detail::Engine<F>::Gen& g) {
  return {g.degree, {g.degree, g.c}, to_fractions(field, g.form), g.marked, g.order};
}

template <ExactField F>
std::vector<typename detail::Engine<F>::Gen> from_records(detail::Engine<F>& engine,
                                                          const std::vector<GeneratorRecord>& gens) {
  std::vector<typename detail::Engine<F>::Gen> out;
  for (const auto& rec : gens) {
    if (rec.monomial.d != rec.degree) throw InputError("generator degree does not match its monomial");
    if (!in_cone(engine.divisor(), rec.monomial)) throw InputError("generator monomial is outside the cone");
    typename detail::Engine<F>::Gen g;
    g.degree = rec.degree;
    g.c = rec.monomial.c;
    g.form = engine.section(rec.degree, rec.monomial.c);
    g.marked = rec.marked_point;
    g.order = rec.order_at_marked_point;
    out.push_back(std::move(g));
  }
  return out;
}

template <ExactField F>
RelationPoly to_relation(const F& field, const typename detail::Engine<F>::Relation& rel) {
  RelationPoly out;
  out.degree = rel.degree;
  for (const auto& [m, v] : rel.terms) out.terms.push_back({m, detail::to_fraction(field, v)});
  return out;
}

// deg D = 0: S is a polynomial ring on u^l prod t_i^{-l alpha_i}.
template <ExactField F>
GeneratorRecord degree_zero_generator(const F& field, const QDivisor& D) {
  detail::Engine<F> engine(field, D);
  const long ell = denominator_data(D).ell;
  GradedMonomial m{ell, {}};
  for (const auto& a : engine.divisor().alphas()) m.c.push_back(to_long((-(Fraction(ell) * a)).num()));
  return {ell, m, to_fractions(field, engine.section(ell, m.c)), 0, 0};
}

long default_generator_bound(const QDivisor& D) { return degree_bounds(D).gen_bound; }
long default_relation_bound(const QDivisor& D) { return degree_bounds(D).rel_bound; }

// Runs the engine through `through`, stopping once the leading terms found
// so far have the Hilbert series of S_D. The generators then present S_D in
// every degree, so in(I) and hence I are generated below the stopping
// degree and no further relations exist. This needs the generators to map
// onto S_D, which is checked degreewise and follows in all degrees once it
// holds below the generation bound; `stop_from` is where that is known.
template <ExactField F>
bool run_certified(detail::Engine<F>& engine, const QDivisor& D, long through, long rel_through, long stop_from) {
  std::vector<long> weights;
  for (const auto& g : engine.generators()) weights.push_back(g.degree);
  const auto target = detail::ring_numerator(D, weights);
  std::size_t checked = static_cast<std::size_t>(-1);
  for (long d = engine.done_through() + 1; d <= through; ++d) {
    engine.run(d, rel_through);
    const auto& lts = engine.leading_terms();
    if (d < stop_from || lts.size() == checked) continue;
    checked = lts.size();
    std::vector<std::vector<long>> monos;
    for (const auto& [deg, m] : lts) monos.push_back(m);
    if (detail::monomial_quotient_numerator(std::move(monos), weights) == target) return true;
  }
  return false;
}

template <ExactField F>
Presentation present(const F& field, const QDivisor& D, const PresentationOptions& opt) {
  Presentation out;
  out.field = field.spec();
  const int sign = D.degree().sign();
  out.complete = sign <= 0;
  if (sign < 0) {
    detail::realize(field, D);
    if (opt.groebner) out.groebner = GroebnerReport{"revlex", opt.truncation.value_or(0), true, {}, {}};
    return out;
  }
  if (sign == 0) {
    out.generators.push_back(degree_zero_generator(field, D));
    if (opt.groebner) out.groebner = GroebnerReport{"revlex", opt.truncation.value_or(0), true, {}, {}};
    return out;
  }
  detail::Engine<F> engine(field, D);
  auto gens = engine.select_generators(opt.generator_bound.value_or(default_generator_bound(D)));
  for (const auto& g : gens) out.generators.push_back(to_record(field, g));
  if (!opt.relations && !opt.groebner) return out;

  const long rel_through = opt.relations ? opt.relation_bound.value_or(default_relation_bound(D)) : 0;
  const long trunc = opt.groebner ? opt.truncation.value_or(default_relation_bound(D)) : 0;
  engine.set_generators(std::move(gens));
  out.complete = run_certified(engine, D, std::max(rel_through, trunc), rel_through, 0);
  out.hilbert_checked_through = engine.done_through();
  for (const auto& rel : engine.relations()) out.relations.push_back(to_relation(field, rel));
  if (opt.groebner) {
    GroebnerReport rep;
    rep.truncation = std::min(trunc, engine.done_through());
    rep.complete = out.complete;
    for (const auto& [d, m] : engine.leading_terms()) {
      if (d > trunc) continue;
      rep.leading_terms.push_back(m);
      rep.leading_term_degrees.push_back(d);
    }
    out.groebner = std::move(rep);
  }
  return out;
}

std::vector<long> sorted(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<long> Presentation::generator_degrees() const {
  std::vector<long> out;
  for (const auto& g : generators) out.push_back(g.degree);
  return sorted(out);
}

std::vector<long> Presentation::relation_degrees() const {
  std::vector<long> out;
  for (const auto& r : relations) out.push_back(r.degree);
  return sorted(out);
}

SectionSpace section_space(const QDivisor& D, const FieldSpec& field, long d) {
  return section_space(D, field, d, monomial_basis(D, d));
}

SectionSpace section_space(const QDivisor& D, const FieldSpec& spec, long d,
                           const std::vector<GradedMonomial>& monomials) {
  return visit_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    detail::Engine<F> engine(field, D);
    SectionSpace out;
    out.field = spec;
    out.degree = d;
    out.r = engine.r(d);
    out.monomials = monomials;
    if (out.r < 0) {
      if (!monomials.empty()) throw InputError("S_" + std::to_string(d) + " is zero");
      return out;
    }
    Matrix<F> m(field, monomials.size(), static_cast<std::size_t>(out.r + 1));
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if (monomials[i].d != d) throw InputError("monomial of the wrong degree");
      const auto f = engine.section(d, monomials[i].c);
      for (std::size_t j = 0; j < f.size(); ++j) m(i, j) = f[j];
      out.coeff_matrix.push_back(to_fractions(field, f));
    }
    out.rank = static_cast<long>(rank(m));
    return out;
  });
}

std::vector<GeneratorRecord> minimal_generators(const QDivisor& D, const FieldSpec& field, std::optional<long> up_to) {
  PresentationOptions opt;
  opt.generator_bound = up_to;
  opt.relations = false;
  return compute_presentation(D, field, opt).generators;
}

std::vector<RelationPoly> relation_ideal(const QDivisor& D, const FieldSpec& spec,
                                         const std::vector<GeneratorRecord>& gens, std::optional<long> up_to) {
  if (D.degree().sign() <= 0) return {};
  return visit_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    detail::Engine<F> engine(field, D);
    engine.set_generators(from_records(engine, gens));
    const long through = up_to.value_or(default_relation_bound(D));
    run_certified(engine, D, through, through, default_generator_bound(D) - 1);
    std::vector<RelationPoly> out;
    for (const auto& rel : engine.relations()) out.push_back(to_relation(field, rel));
    return out;
  });
}

GroebnerReport groebner_leading_terms(const QDivisor& D, const FieldSpec& spec,
                                      const std::vector<GeneratorRecord>& gens, std::optional<long> up_to) {
  if (D.degree().sign() <= 0) return {"revlex", up_to.value_or(0), true, {}, {}};
  return visit_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    detail::Engine<F> engine(field, D);
    engine.set_generators(from_records(engine, gens));
    GroebnerReport rep;
    rep.complete =
        run_certified(engine, D, up_to.value_or(default_relation_bound(D)), 0, default_generator_bound(D) - 1);
    rep.truncation = engine.done_through();
    for (const auto& [d, m] : engine.leading_terms()) {
      rep.leading_terms.push_back(m);
      rep.leading_term_degrees.push_back(d);
    }
    return rep;
  });
}

bool relation_vanishes(const QDivisor& D, const FieldSpec& spec, const std::vector<GeneratorRecord>& gens,
                       const RelationPoly& relation) {
  return visit_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    detail::Engine<F> engine(field, D);
    const long r = engine.r(relation.degree);
    Vec<F> total(r < 0 ? 0 : static_cast<std::size_t>(r + 1), field.zero());
    for (const auto& term : relation.terms) {
      if (term.exponents.size() != gens.size()) throw InputError("relation has the wrong number of variables");
      std::vector<long> c(engine.n(), 0);
      long deg = 0;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        deg += term.exponents[k] * gens[k].degree;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += term.exponents[k] * gens[k].monomial.c.at(i);
      }
      if (deg != relation.degree) return false;
      const auto f = engine.section(relation.degree, c);
      const auto coeff = from_coefficient(field, term.coefficient);
      for (std::size_t j = 0; j < f.size(); ++j) total[j] = field.add(total[j], field.mul(coeff, f[j]));
    }
    return std::all_of(total.begin(), total.end(), [&](const auto& x) { return field.is_zero(x); });
  });
}

long xgen_threshold(const QDivisor& D) {
  const Fraction deg = D.degree();
  if (deg.sign() <= 0) throw Unsupported("xgen threshold needs deg D > 0");
  if (D.size() == 1) return 0;
  return to_long((Fraction(2 * static_cast<long>(D.size()) - 2) / deg).ceil());
}

Presentation compute_presentation(const QDivisor& D, const FieldSpec& spec, const PresentationOptions& options) {
  return visit_field(spec, [&](const auto& field) { return present(field, D, options); });
}

std::vector<PointConfig> random_configs(std::size_t n, const std::vector<std::uint64_t>& characteristics,
                                        std::size_t per_char, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t m) { return rng() % m; };
  std::vector<PointConfig> out;
  for (auto p : characteristics) {
    const FieldSpec spec = FieldSpec::with_at_least(p, 32);
    spec.validate();
    for (std::size_t k = 0; k < per_char; ++k) {
      PointConfig cfg{{}, spec};
      if (p == 0) {
        while (cfg.points.size() < n) {
          const long num = static_cast<long>(below(201)) - 100;
          const long den = static_cast<long>(below(100)) + 1;
          const auto pt = PointP1::rational(Fraction(num, den));
          if (std::find(cfg.points.begin(), cfg.points.end(), pt) == cfg.points.end()) cfg.points.push_back(pt);
        }
      } else {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < spec.degree; ++i) q *= p;
        if (n > q + 1) throw InputError("P^1 over " + spec.str() + " has fewer than " + std::to_string(n) + " points");
        std::vector<std::uint64_t> picked;
        while (cfg.points.size() < n) {
          const auto idx = below(q + 1);
          if (std::find(picked.begin(), picked.end(), idx) != picked.end()) continue;
          picked.push_back(idx);
          if (idx == 0) {
            cfg.points.push_back(PointP1::infinity());
          } else if (idx == 1) {
            cfg.points.push_back(PointP1::rational(Fraction(0)));
          } else if (spec.degree == 1) {
            cfg.points.push_back(PointP1::rational(Fraction(static_cast<long>(idx - 1))));
          } else {
            cfg.points.push_back(PointP1::generator_power(idx - 2));
          }
        }
      }
      out.push_back(std::move(cfg));
    }
  }
  return out;
}

ScanReport stability_scan(const std::vector<Fraction>& alphas, const std::vector<PointConfig>& configs,
                          const ScanOptions& options) {
  ScanReport rep;
  rep.alphas = alphas;
  const QDivisor shape = QDivisor::from_alphas(alphas);
  if (shape.degree().sign() > 0) rep.xgen_threshold = xgen_threshold(shape);

  PresentationOptions opt;
  opt.relations = options.relations;
  opt.groebner = options.groebner;
  opt.truncation = options.truncation;
  for (const auto& cfg : configs) {
    ConfigResult res;
    res.config = cfg;
    try {
      const auto pres = compute_presentation(QDivisor(cfg.points, alphas), cfg.field, opt);
      res.generator_degrees = pres.generator_degrees();
      for (const auto& g : pres.generators) res.generator_monomials.push_back(g.monomial);
      if (pres.groebner) res.leading_terms = pres.groebner->leading_terms;
      if (options.relations) res.relation_degrees = pres.relation_degrees();
    } catch (const PointCollision& e) {
      res.skipped = true;
      res.skip_reason = e.what();
    }
    rep.results.push_back(std::move(res));
  }

  // Compare every config with the most common outcome.
  using Key = std::pair<std::vector<long>, std::optional<std::vector<std::vector<long>>>>;
  std::map<Key, std::size_t> tally;
  for (const auto& res : rep.results) {
    if (!res.skipped) ++tally[{res.generator_degrees, res.leading_terms}];
  }
  if (tally.empty()) return rep;
  const Key mode = std::max_element(tally.begin(), tally.end(), [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   })->first;
  const ConfigResult* first = nullptr;
  for (std::size_t i = 0; i < rep.results.size(); ++i) {
    const auto& res = rep.results[i];
    if (res.skipped) continue;
    if (!first) first = &res;
    const bool gens_differ = res.generator_degrees != mode.first;
    const bool lt_differ = res.leading_terms != mode.second;
    if (gens_differ) rep.generators_stable = false;
    if (lt_differ) rep.groebner_stable = false;
    if (gens_differ || lt_differ) rep.disagreeing.push_back(i);
    if (res.generator_monomials != first->generator_monomials) rep.monomials_stable = false;
    if (res.relation_degrees != first->relation_degrees) rep.relations_stable = false;
  }
  return rep;
}

}  // namespace canring
