#pragma once

// Independent reference computations for the unit tests. These go straight
// from definitions and share no code with the library beyond Fraction.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "canring/fraction.hpp"

namespace oracle {

using canring::Fraction;

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Is some fraction with denominator below den(x) inside [lo, hi]?
inline bool smaller_denominator_between(const Fraction& x, const Fraction& lo, const Fraction& hi) {
  for (mpz_class d = 1; d < x.den(); ++d) {
    if (ceil_div(lo.num() * d, lo.den()) <= floor_div(hi.num() * d, hi.den())) return true;
  }
  return false;
}

/// Every c/d in [start, alpha] with no smaller-denominator fraction in
/// [c/d, alpha], scanning all denominators up to den(alpha).
inline std::vector<Fraction> best_lower(const Fraction& alpha, const Fraction& start) {
  std::vector<Fraction> out;
  for (mpz_class d = 1; d <= alpha.den(); ++d) {
    for (mpz_class c = ceil_div(start.num() * d, start.den()); c <= floor_div(alpha.num() * d, alpha.den()); ++c) {
      const Fraction x(c, d);
      if (x.den() != d) continue;
      if (!smaller_denominator_between(x, x, alpha)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Minus continued fraction by repeated ceilings: x = 1/alpha, q = ceil(x),
/// x <- 1/(q - x) until x is an integer.
inline std::vector<mpz_class> minus_cf(const Fraction& alpha) {
  std::vector<mpz_class> out;
  Fraction x = Fraction(1) / alpha;
  for (;;) {
    const mpz_class q = ceil_div(x.num(), x.den());
    out.push_back(q);
    if (x.is_integer()) return out;
    x = Fraction(1) / (Fraction(q) - x);
  }
}

/// Smallest denominator in [lo, hi]; ties: smallest |c|, then positive.
inline Fraction min_denominator(const Fraction& lo, const Fraction& hi) {
  for (mpz_class d = 1;; ++d) {
    std::vector<Fraction> found;
    for (mpz_class c = ceil_div(lo.num() * d, lo.den()); c <= floor_div(hi.num() * d, hi.den()); ++c) {
      found.emplace_back(c, d);
    }
    if (found.empty()) continue;
    return *std::min_element(found.begin(), found.end(), [](const Fraction& a, const Fraction& b) {
      const auto aa = abs(a), bb = abs(b);
      if (aa != bb) return aa < bb;
      return a > b;
    });
  }
}

inline Fraction random_fraction(std::mt19937_64& rng, long max_den, long max_abs) {
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
  const long span = 2 * max_abs * den + 1;
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) - max_abs * den;
  return Fraction(num, den);
}

}  // namespace oracle
