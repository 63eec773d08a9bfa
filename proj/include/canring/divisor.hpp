#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "canring/fraction.hpp"

namespace canring {

/// A point of the projective line: infinity, an exact rational (which makes
/// sense in every characteristic after reduction), or g^e for the chosen
/// generator g of a finite field's multiplicative group.
class PointP1 {
 public:
  enum class Kind { infinity, rational, generator_power };

  static PointP1 infinity() { return PointP1(Kind::infinity, Fraction(0), 0); }
  static PointP1 rational(Fraction value) { return PointP1(Kind::rational, std::move(value), 0); }
  static PointP1 generator_power(std::uint64_t exponent) {
    return PointP1(Kind::generator_power, Fraction(0), exponent);
  }
  /// "inf", "num/den", or "g^e".
  static PointP1 parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  const Fraction& value() const { return value_; }
  std::uint64_t exponent() const { return exponent_; }
  std::string str() const;

  friend bool operator==(const PointP1&, const PointP1&) = default;

 private:
  PointP1(Kind kind, Fraction value, std::uint64_t exponent)
      : kind_(kind), value_(std::move(value)), exponent_(exponent) {}

  Kind kind_;
  Fraction value_;
  std::uint64_t exponent_;
};

/// D = sum_i alpha_i P_i with exact rational coefficients.
class QDivisor {
 public:
  /// Throws InputError on empty input, length mismatch or repeated points.
  QDivisor(std::vector<PointP1> points, std::vector<Fraction> alphas);

  /// Alphas at the default points inf, 0, 1, 2, ... .
  static QDivisor from_alphas(std::vector<Fraction> alphas);

  std::size_t size() const { return alphas_.size(); }
  const std::vector<PointP1>& points() const { return points_; }
  const std::vector<Fraction>& alphas() const { return alphas_; }
  const Fraction& alpha(std::size_t i) const { return alphas_[i]; }
  Fraction degree() const;

  /// Same divisor at other points.
  QDivisor moved_to(std::vector<PointP1> points) const;

  /// A one-point divisor gets a multiplicity-zero point appended (at the first
  /// of inf, 0, 1, ... not already used); other divisors are returned as-is.
  QDivisor with_ghost_point() const;

 private:
  std::vector<PointP1> points_;
  std::vector<Fraction> alphas_;
};

/// Default point list inf, 0, 1, 2, ..., n-2.
std::vector<PointP1> default_points(std::size_t n);

struct DenominatorData {
  long ell = 1;                // lcm of all denominators
  std::vector<long> ell_i;     // lcm of the denominators other than the i-th
  Fraction deg_D;
};

/// Denominator data of D. A one-point divisor is first given a ghost point,
/// so ell_i has length max(n, 2).
DenominatorData denominator_data(const QDivisor& D);

/// b_i = floor(d * alpha_i).
std::vector<long> floor_divisor(const QDivisor& D, long d);

/// deg floor(dD) = sum_i floor(d * alpha_i).
long floor_degree(const QDivisor& D, long d);

/// dim S_d = max(deg floor(dD) + 1, 0).
long graded_dim(const QDivisor& D, long d);

/// Strict upper bounds on generator and relation degrees.
struct DegreeBounds {
  long gen_bound = 0;
  long rel_bound = 0;
};

/// gen_bound = sum ell_i, rel_bound = max(ell + sum ell_i, 2 sum ell_i).
/// Throws Unsupported unless deg D > 0.
DegreeBounds degree_bounds(const QDivisor& D);

/// n - 1 + ell_1 ... ell_n (deg D)^(n-1), rounded up. Throws Unsupported
/// unless deg D > 0.
mpz_class semigroup_count_bound(const QDivisor& D);

}  // namespace canring
