#pragma once

#include <gmpxx.h>

#include <vector>

#include "canring/fraction.hpp"

namespace canring {

/// Lattice vector (d, c) standing for the monomial t^c u^d; the slope c/d is
/// the fraction it represents.
struct LatticeVec2 {
  mpz_class d;
  mpz_class c;

  static LatticeVec2 of(const Fraction& f) { return {f.den(), f.num()}; }
  Fraction slope() const { return Fraction(c, d); }

  friend bool operator==(const LatticeVec2&, const LatticeVec2&) = default;
};

/// 2x2 determinant a.d * b.c - a.c * b.d, i.e. the orientation of (a, b).
mpz_class cross(const LatticeVec2& a, const LatticeVec2& b);

enum class Direction { lower, upper };

/// Chain of best lower (strictly increasing) or best upper (strictly
/// decreasing) approximations. Consecutive entries are unimodular.
struct ApproxSequence {
  Direction direction = Direction::lower;
  std::vector<Fraction> entries;

  std::vector<LatticeVec2> vectors() const;
  std::size_t size() const { return entries.size(); }
};

/// All best lower approximations c/d of alpha with start <= c/d <= alpha, in
/// increasing order. The last entry is alpha itself.
/// Throws InputError when start > alpha or start is not a best lower
/// approximation of alpha.
ApproxSequence best_lower_approximations(const Fraction& alpha, const Fraction& start);

/// All best upper approximations of beta from start down to beta.
ApproxSequence best_upper_approximations(const Fraction& beta, const Fraction& start);

/// True iff no fraction with smaller denominator lies in [x, alpha].
bool is_best_lower_approximation(const Fraction& x, const Fraction& alpha);

/// A fraction in [lo, hi] of minimal denominator; ties go to the smallest
/// absolute numerator, then to the positive value.
Fraction minimal_denominator_in_interval(const Fraction& lo, const Fraction& hi);

/// Minus continued fraction [d1, a1, ..., a_{r-1}] of alpha > 0, read off the
/// best-approximation chain from 0/1 via v_{i-1} + v_{i+1} = a_i v_i, so that
///   alpha = 1 / (d1 - 1 / (a1 - 1 / (... - 1 / a_{r-1}))).
std::vector<mpz_class> minus_continued_fraction(const Fraction& alpha);

/// Evaluates 1 / (q[0] - 1 / (q[1] - ...)).
Fraction evaluate_minus_continued_fraction(const std::vector<mpz_class>& quotients);

}  // namespace canring
