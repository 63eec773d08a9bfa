#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canring/conelattice.hpp"
#include "canring/divisor.hpp"
#include "canring/field.hpp"
#include "canring/fraction.hpp"

namespace canring {

// Field elements leave the engine as Fractions: exact rationals over Q,
// residues 0..p-1 over F_p, and the base-p digit encoding over GF(p^k).

/// A graded piece S_d. Row k holds the coefficients of the k-th monomial's
/// section as a polynomial in the affine coordinate t (T^a W^(r-a) <-> t^a),
/// with t_i = den*t - num at a finite point and t_i = 1 at infinity.
struct SectionSpace {
  FieldSpec field;
  long degree = 0;
  long r = -1;  // deg floor(dD)
  std::vector<GradedMonomial> monomials;
  std::vector<std::vector<Fraction>> coeff_matrix;
  long rank = 0;
};

/// S_d on the monomial basis (see monomial_basis). Throws PointCollision if two points
/// coincide in the field.
SectionSpace section_space(const QDivisor& D, const FieldSpec& field, long d);

/// Same, for an arbitrary list of degree-d monomials of the spanning set.
SectionSpace section_space(const QDivisor& D, const FieldSpec& field, long d,
                           const std::vector<GradedMonomial>& monomials);

struct GeneratorRecord {
  long degree = 0;
  GradedMonomial monomial;
  std::vector<Fraction> section;
  std::size_t marked_point = 0;
  long order_at_marked_point = 0;
};

struct RelationTerm {
  std::vector<long> exponents;
  Fraction coefficient;
};

/// Weighted-homogeneous polynomial in x_1..x_N (deg x_i = deg g_i).
struct RelationPoly {
  long degree = 0;
  std::vector<RelationTerm> terms;  // sorted by exponent vector, decreasing lex

  std::size_t support_size() const { return terms.size(); }
};

struct GroebnerReport {
  std::string order = "revlex";
  long truncation = 0;
  /// True when the leading terms generate all of in(I): the Hilbert series
  /// of k[x]/(leading terms) equals that of S_D. Computation stops there.
  bool complete = false;
  /// Minimal generators of the initial ideal in degrees <= truncation,
  /// sorted by degree and then by the monomial order.
  std::vector<std::vector<long>> leading_terms;
  std::vector<long> leading_term_degrees;
};

/// Minimal generators in degrees < up_to (default: the generation bound),
/// ordered by degree and, within a degree, by strictly decreasing vanishing
/// order at that degree's marked point.
std::vector<GeneratorRecord> minimal_generators(const QDivisor& D, const FieldSpec& field,
                                                std::optional<long> up_to = std::nullopt);

/// Minimal relations among gens in degrees <= up_to (default: the relation
/// bound), one representative per minimal relation. Stops early once the
/// relations are certified complete. Throws IncompleteGenerators if gens fail
/// to span some S_d.
std::vector<RelationPoly> relation_ideal(const QDivisor& D, const FieldSpec& field,
                                         const std::vector<GeneratorRecord>& gens,
                                         std::optional<long> up_to = std::nullopt);

/// Minimal generators of in(I) up to the truncation degree (default: the
/// relation bound), or fewer degrees once they are certified complete.
GroebnerReport groebner_leading_terms(const QDivisor& D, const FieldSpec& field,
                                      const std::vector<GeneratorRecord>& gens,
                                      std::optional<long> up_to = std::nullopt);

/// True iff the relation maps to the zero section under x_i -> g_i.
bool relation_vanishes(const QDivisor& D, const FieldSpec& field, const std::vector<GeneratorRecord>& gens,
                       const RelationPoly& relation);

/// ceil((2n - 2) / deg D); 0 for n = 1. Throws Unsupported unless deg D > 0.
long xgen_threshold(const QDivisor& D);

/// Everything about one divisor over one field, computed in a single pass.
struct PresentationOptions {
  std::optional<long> generator_bound;
  bool relations = true;
  std::optional<long> relation_bound;
  bool groebner = false;
  std::optional<long> truncation;
};

struct Presentation {
  FieldSpec field;
  std::vector<GeneratorRecord> generators;
  std::vector<RelationPoly> relations;
  std::optional<GroebnerReport> groebner;
  /// Degrees through which #monomials(d) - dim I_d = dim S_d was checked.
  long hilbert_checked_through = 0;
  /// The leading terms were certified to generate in(I) (Hilbert series of
  /// k[x]/in(I) equals that of S_D), so relations and leading terms are final
  /// and the computation stopped at hilbert_checked_through.
  bool complete = false;

  std::vector<long> generator_degrees() const;
  std::vector<long> relation_degrees() const;
};

Presentation compute_presentation(const QDivisor& D, const FieldSpec& field, const PresentationOptions& options = {});

struct OracleResult {
  std::vector<long> generator_degrees;
  std::vector<long> relation_degrees;
};

/// Independent recomputation from section_space, naive products of basis
/// sections, and kernels on the full monomial space. Throws Unsupported for
/// instances that are too large (graded_dim above 40 or too many monomials).
OracleResult brute_force_oracle(const QDivisor& D, const FieldSpec& field, std::optional<long> up_to = std::nullopt);

// Stability scans over point configurations.

struct PointConfig {
  std::vector<PointP1> points;
  FieldSpec field;
};

/// per_char seeded random configurations of n distinct points for each listed
/// characteristic (0 for Q). Over Q the points are rationals with numerator
/// and denominator bounded by 100; in characteristic p they are drawn from
/// P^1 of FieldSpec::with_at_least(p, 32).
std::vector<PointConfig> random_configs(std::size_t n, const std::vector<std::uint64_t>& characteristics,
                                        std::size_t per_char, std::uint64_t seed);

struct ScanOptions {
  bool groebner = false;
  bool relations = false;
  std::optional<long> truncation;
};

struct ConfigResult {
  PointConfig config;
  bool skipped = false;
  std::string skip_reason;
  std::vector<long> generator_degrees;
  std::vector<GradedMonomial> generator_monomials;
  std::optional<std::vector<std::vector<long>>> leading_terms;
  std::optional<std::vector<long>> relation_degrees;
};

struct ScanReport {
  std::vector<Fraction> alphas;
  std::vector<ConfigResult> results;
  std::optional<long> xgen_threshold;
  bool generators_stable = true;
  bool monomials_stable = true;
  bool groebner_stable = true;
  bool relations_stable = true;  // experimental, never asserted
  /// Indices of configs whose generator degrees or leading terms differ from
  /// the most common outcome.
  std::vector<std::size_t> disagreeing;

  bool stable() const { return generators_stable && groebner_stable; }
};

ScanReport stability_scan(const std::vector<Fraction>& alphas, const std::vector<PointConfig>& configs,
                          const ScanOptions& options = {});

}  // namespace canring
