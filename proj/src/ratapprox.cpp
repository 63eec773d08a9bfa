#include "canring/ratapprox.hpp"

#include "canring/errors.hpp"

namespace canring {

namespace {

// Simplest fraction in [lo, hi] for 0 < lo <= hi: smallest integer if one
// fits, otherwise descend one level of the Stern-Brocot tree through the
// reciprocal of the fractional parts.
Fraction simplest_positive(const Fraction& lo, const Fraction& hi) {
  const mpz_class a = lo.ceil();
  if (Fraction(a) <= hi) return Fraction(a);
  const Fraction n(lo.floor());
  const Fraction inner = simplest_positive(Fraction(1) / (hi - n), Fraction(1) / (lo - n));
  return n + Fraction(1) / inner;
}

// Next best lower approximation after cur (cur < alpha). Consecutive best
// lower approximations are unimodular, so the successor is the member of
//   { (d, c) : c*d1 - c1*d = 1 }
// with the smallest d whose slope does not exceed alpha. This is the Stern-Brocot
// descent with all same-direction steps taken at once.
Fraction next_lower(const Fraction& cur, const Fraction& alpha) {
  const mpz_class& d1 = cur.den();
  const mpz_class& c1 = cur.num();
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d1.get_mpz_t(), c1.get_mpz_t());
  // s*d1 + t*c1 = 1  =>  (d, c) = (-t, s) solves c*d1 - c1*d = 1.
  const mpz_class d0 = -t;
  const mpz_class c0 = s;
  // c/d = c1/d1 + 1/(d*d1) <= alpha  <=>  d >= 1/(d1*alpha - c1).
  const Fraction gap = Fraction(d1) * alpha - Fraction(c1);
  mpz_class bound = (Fraction(1) / gap).ceil();
  if (bound < 1) bound = 1;
  // smallest k with d0 + k*d1 >= bound
  mpz_class k;
  const mpz_class diff = bound - d0;
  mpz_cdiv_q(k.get_mpz_t(), diff.get_mpz_t(), d1.get_mpz_t());
  return Fraction(c0 + k * c1, d0 + k * d1);
}

}  // namespace

mpz_class cross(const LatticeVec2& a, const LatticeVec2& b) { return a.d * b.c - a.c * b.d; }

std::vector<LatticeVec2> ApproxSequence::vectors() const {
  std::vector<LatticeVec2> out;
  out.reserve(entries.size());
  for (const auto& f : entries) out.push_back(LatticeVec2::of(f));
  return out;
}

bool is_best_lower_approximation(const Fraction& x, const Fraction& alpha) {
  if (x > alpha) return false;
  return minimal_denominator_in_interval(x, alpha).den() >= x.den();
}

ApproxSequence best_lower_approximations(const Fraction& alpha, const Fraction& start) {
  if (start > alpha) {
    throw InputError("best_lower_approximations: start " + start.str() + " exceeds " + alpha.str());
  }
  if (!is_best_lower_approximation(start, alpha)) {
    throw InputError("best_lower_approximations: " + start.str() +
                     " is not a best lower approximation of " + alpha.str());
  }
  ApproxSequence seq{Direction::lower, {start}};
  while (seq.entries.back() != alpha) {
    seq.entries.push_back(next_lower(seq.entries.back(), alpha));
  }
  return seq;
}

ApproxSequence best_upper_approximations(const Fraction& beta, const Fraction& start) {
  if (start < beta) {
    throw InputError("best_upper_approximations: start " + start.str() + " is below " + beta.str());
  }
  ApproxSequence mirrored = best_lower_approximations(-beta, -start);
  ApproxSequence seq{Direction::upper, {}};
  seq.entries.reserve(mirrored.size());
  for (const auto& f : mirrored.entries) seq.entries.push_back(-f);
  return seq;
}

Fraction minimal_denominator_in_interval(const Fraction& lo, const Fraction& hi) {
  if (lo > hi) throw InputError("minimal_denominator_in_interval: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Fraction(0);
  if (lo.sign() > 0) return simplest_positive(lo, hi);
  return -simplest_positive(-hi, -lo);
}

std::vector<mpz_class> minus_continued_fraction(const Fraction& alpha) {
  if (alpha.sign() <= 0) throw InputError("minus_continued_fraction: alpha must be positive");
  const auto v = best_lower_approximations(alpha, Fraction(0)).vectors();
  std::vector<mpz_class> q{v[1].d};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const mpz_class sd = v[i - 1].d + v[i + 1].d;
    const mpz_class sc = v[i - 1].c + v[i + 1].c;
    const mpz_class a = sd / v[i].d;
    if (a * v[i].d != sd || a * v[i].c != sc) {
      throw InternalError("minus_continued_fraction: chain is not unimodular");
    }
    q.push_back(a);
  }
  return q;
}

Fraction evaluate_minus_continued_fraction(const std::vector<mpz_class>& quotients) {
  if (quotients.empty()) throw InputError("empty minus continued fraction");
  Fraction x(quotients.back());
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    x = Fraction(*it) - Fraction(1) / x;
  }
  return Fraction(1) / x;
}

}  // namespace canring
