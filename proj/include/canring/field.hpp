#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "canring/divisor.hpp"
#include "canring/errors.hpp"
#include "canring/fraction.hpp"

namespace canring {

/// Ground field: Q (characteristic 0), F_p, or GF(p^k) for small p^k.
struct FieldSpec {
  std::uint64_t characteristic = 0;
  unsigned degree = 1;

  static FieldSpec rationals() { return {0, 1}; }
  static FieldSpec prime(std::uint64_t p) { return {p, 1}; }
  static FieldSpec galois(std::uint64_t p, unsigned k) { return {p, k}; }
  /// Smallest field of characteristic p with at least min_size elements
  /// (characteristic 0 gives Q).
  static FieldSpec with_at_least(std::uint64_t p, std::uint64_t min_size);

  bool is_rational() const { return characteristic == 0; }
  /// "Q", "F_7", "GF(2^5)".
  std::string str() const;
  /// Throws InputError for non-prime characteristic, p >= 2^61, or an
  /// extension field with more than 2^16 elements.
  void validate() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// The rational numbers. Row reduction over this field runs fraction-free on
/// primitive integer rows (see fraction_free).
class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool fraction_free = true;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_long(long v) const { return v; }
  value_type from_fraction(const Fraction& f) const { return f.value(); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const;
  std::string str(const value_type& a) const { return Fraction(a).str(); }
  /// Field element of a point g^e; not available over Q.
  value_type generator_power(std::uint64_t) const;
};

/// F_p for a prime p < 2^61.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool fraction_free = false;

  explicit PrimeField(std::uint64_t p);

  FieldSpec spec() const { return FieldSpec::prime(p_); }
  std::uint64_t modulus() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_long(long v) const;
  value_type from_mpz(const mpz_class& z) const;
  /// Throws PointCollision when the denominator vanishes mod p.
  value_type from_fraction(const Fraction& f) const;
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    const value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  std::string str(value_type a) const { return std::to_string(a); }
  /// Powers of a fixed primitive root.
  value_type generator_power(std::uint64_t e) const;

 private:
  std::uint64_t p_;
  std::uint64_t primitive_root_ = 0;
};

/// GF(p^k), k >= 2, p^k <= 2^16. Elements are encoded as integers whose base-p
/// digits are the coefficients of a polynomial modulo a primitive polynomial;
/// multiplication goes through discrete log tables.
class GaloisField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool fraction_free = false;

  GaloisField(std::uint64_t p, unsigned k);

  FieldSpec spec() const { return FieldSpec::galois(tables_->p, tables_->k); }
  std::uint32_t order() const { return tables_->q; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_long(long v) const;
  value_type from_fraction(const Fraction& f) const;
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    const auto& t = *tables_;
    std::uint32_t e = t.log[a] + t.log[b];
    if (e >= t.q - 1) e -= t.q - 1;
    return t.exp[e];
  }
  value_type neg(value_type a) const;
  value_type inv(value_type a) const;
  std::string str(value_type a) const;
  value_type generator_power(std::uint64_t e) const { return tables_->exp[e % (tables_->q - 1)]; }

 private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;
  };
  std::shared_ptr<const Tables> tables_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a) {
  typename F::value_type;
  { F::fraction_free } -> std::convertible_to<bool>;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.neg(a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.from_long(1L) } -> std::convertible_to<typename F::value_type>;
  { f.str(a) } -> std::convertible_to<std::string>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

/// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  spec.validate();
  if (spec.is_rational()) return std::forward<Fn>(fn)(RationalField{});
  if (spec.degree == 1) return std::forward<Fn>(fn)(PrimeField(spec.characteristic));
  return std::forward<Fn>(fn)(GaloisField(spec.characteristic, spec.degree));
}

/// Homogeneous linear form a*T + b*W vanishing at a point, stored as {a, b}.
template <ExactField F>
struct LinearForm {
  typename F::value_type t_coeff;
  typename F::value_type w_coeff;
};

/// The form t_P for P: W at infinity, den*T - num*W at num/den, T - g^e W at
/// g^e. In characteristic p a rational whose denominator vanishes lands at
/// infinity, as it should projectively.
template <ExactField F>
LinearForm<F> point_form(const F& field, const PointP1& point) {
  switch (point.kind()) {
    case PointP1::Kind::infinity:
      return {field.zero(), field.one()};
    case PointP1::Kind::rational: {
      const auto& v = point.value();
      if constexpr (std::is_same_v<F, RationalField>) {
        return {mpq_class(v.den()), mpq_class(-v.num())};
      } else {
        const auto num = field.from_fraction(Fraction(v.num()));
        const auto den = field.from_fraction(Fraction(v.den()));
        return {den, field.neg(num)};
      }
    }
    case PointP1::Kind::generator_power:
      return {field.one(), field.neg(field.generator_power(point.exponent()))};
  }
  throw InternalError("unknown point kind");
}

}  // namespace canring
