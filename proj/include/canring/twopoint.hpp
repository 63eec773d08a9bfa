#pragma once

#include <gmpxx.h>

#include <vector>

#include "canring/fraction.hpp"
#include "canring/ratapprox.hpp"

namespace canring {

/// g_ij = f_i f_j - f_h^a f_{h+1}^b; b = 0 is the single-monomial form.
struct TwoPointRelation {
  long i = 0;
  long j = 0;
  long h = 0;
  mpz_class a;
  mpz_class b;

  friend bool operator==(const TwoPointRelation&, const TwoPointRelation&) = default;
};

enum class RingKind {
  trivial,     // alpha + beta < 0: S = k
  polynomial,  // alpha + beta = 0: one generator
  general,
};

/// Presentation of S_D for D = alpha P + beta Q. Generators are indexed
/// -s..r; generator(i) is v_i = (d_i, c_i) and the slopes c_i/d_i increase
/// with i. Index 0 is the minimal-denominator seed in [-beta, alpha].
struct TwoPointPresentation {
  Fraction alpha;
  Fraction beta;
  RingKind kind = RingKind::general;
  long r = 0;
  long s = 0;
  std::vector<LatticeVec2> generators;  // generators[k] is v_{k - s}
  std::vector<TwoPointRelation> relations;

  const LatticeVec2& generator(long i) const { return generators.at(static_cast<std::size_t>(i + s)); }
  std::vector<long> generator_degrees() const;
  /// d_i + d_j for every relation.
  std::vector<long> relation_degrees() const;
};

/// Closed-form presentation. Relations are sorted by (i, j).
TwoPointPresentation two_point_presentation(const Fraction& alpha, const Fraction& beta);

/// Checks balance of every relation in both coordinates, a >= 1, the
/// unimodularity of consecutive generators, and the counts r + s + 1 and
/// C(r + s, 2).
bool verify_presentation(const TwoPointPresentation& p);

}  // namespace canring
