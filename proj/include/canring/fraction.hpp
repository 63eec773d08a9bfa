#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace canring {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator, so equality is structural.
class Fraction {
 public:
  Fraction() = default;
  Fraction(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Fraction(const mpz_class& num, const mpz_class& den = 1);
  explicit Fraction(mpq_class value);

  /// Parses "num/den" or "num" (optional sign on the numerator).
  static Fraction parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  mpz_class floor() const;
  mpz_class ceil() const;
  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", with the denominator omitted when it is 1.
  std::string str() const;

  Fraction operator-() const { return Fraction(mpq_class(-q_)); }
  Fraction& operator+=(const Fraction& o);
  Fraction& operator-=(const Fraction& o);
  Fraction& operator*=(const Fraction& o);
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

Fraction abs(const Fraction& f);

/// Converts an mpz to long, throwing InputError if it does not fit.
long to_long(const mpz_class& z);

}  // namespace canring
