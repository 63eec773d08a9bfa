#include "canring/field.hpp"

#include <algorithm>

namespace canring {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit integers
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::with_at_least(std::uint64_t p, std::uint64_t min_size) {
  if (p == 0) return rationals();
  unsigned k = 1;
  std::uint64_t q = p;
  while (q < min_size) {
    q *= p;
    ++k;
  }
  return {p, k};
}

std::string FieldSpec::str() const {
  if (characteristic == 0) return "Q";
  if (degree == 1) return "F_" + std::to_string(characteristic);
  return "GF(" + std::to_string(characteristic) + "^" + std::to_string(degree) + ")";
}

void FieldSpec::validate() const {
  if (characteristic == 0) {
    if (degree != 1) throw InputError("characteristic 0 admits no extension degree");
    return;
  }
  if (!is_prime(characteristic)) {
    throw InputError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  if (characteristic >= (1ULL << 61)) throw InputError("prime fields are limited to p < 2^61");
  if (degree == 0) throw InputError("extension degree must be positive");
  if (degree > 1) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < degree; ++i) {
      q *= characteristic;
      if (q > (1ULL << 16)) throw InputError("extension fields are limited to 2^16 elements");
    }
  }
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw InternalError("inverse of zero");
  return 1 / a;
}

RationalField::value_type RationalField::generator_power(std::uint64_t) const {
  throw InputError("points of the form g^e need a finite field");
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  FieldSpec::prime(p).validate();
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; p > 2 && primitive_root_ == 0; ++g) {
    if (std::all_of(factors.begin(), factors.end(),
                    [&](std::uint64_t f) { return pow_mod(g, (p - 1) / f, p) != 1; })) {
      primitive_root_ = g;
    }
  }
  if (p == 2) primitive_root_ = 1;
}

PrimeField::value_type PrimeField::from_long(long v) const {
  const long m = static_cast<long>(p_);
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_mpz(const mpz_class& z) const {
  mpz_class r;
  const mpz_class m(static_cast<unsigned long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

PrimeField::value_type PrimeField::from_fraction(const Fraction& f) const {
  const value_type den = from_mpz(f.den());
  if (den == 0) {
    throw PointCollision("denominator of " + f.str() + " vanishes in " + spec().str());
  }
  return mul(from_mpz(f.num()), inv(den));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw InternalError("inverse of zero");
  return pow_mod(a, p_ - 2, p_);
}

PrimeField::value_type PrimeField::generator_power(std::uint64_t e) const {
  return pow_mod(primitive_root_, e % (p_ - 1), p_);
}

namespace {

// Multiply two polynomials over F_p given as digit vectors, reducing modulo the
// monic polynomial `modulus` (degree k, leading coefficient implicit).
std::vector<std::uint32_t> mul_x_mod(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = a.size();
  std::vector<std::uint32_t> out(k, 0);
  const std::uint32_t top = a[k - 1];
  for (std::size_t i = k - 1; i > 0; --i) out[i] = a[i - 1];
  out[0] = 0;
  // x^k = -sum modulus[i] x^i
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = (out[i] + (p - (modulus[i] * top) % p)) % p;
  }
  return out;
}

std::uint32_t encode(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, unsigned k) {
  FieldSpec::galois(p, k).validate();
  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(p);
  t->k = k;
  t->q = 1;
  for (unsigned i = 0; i < k; ++i) t->q *= t->p;
  // Search the monic polynomials of degree k for one whose root x generates
  // the multiplicative group.
  for (std::uint32_t code = 0; code < t->q; ++code) {
    std::vector<std::uint32_t> modulus(k);
    for (unsigned i = 0, c = code; i < k; ++i, c /= t->p) modulus[i] = c % t->p;
    if (modulus[0] == 0) continue;
    std::vector<std::uint32_t> cur(k, 0);
    cur[0] = 1;
    std::vector<std::uint32_t> exp_table;
    exp_table.reserve(t->q - 1);
    std::vector<char> seen(t->q, 0);
    bool primitive = true;
    for (std::uint32_t e = 0; e + 1 < t->q; ++e) {
      const std::uint32_t v = encode(cur, t->p);
      if (v == 0 || seen[v]) {
        primitive = false;
        break;
      }
      seen[v] = 1;
      exp_table.push_back(v);
      cur = mul_x_mod(cur, modulus, t->p);
    }
    if (!primitive || encode(cur, t->p) != 1) continue;
    t->exp = std::move(exp_table);
    t->log.assign(t->q, 0);
    for (std::uint32_t e = 0; e + 1 < t->q; ++e) t->log[t->exp[e]] = e;
    break;
  }
  if (t->exp.empty()) throw InternalError("no primitive polynomial found for " + FieldSpec::galois(p, k).str());
  tables_ = std::move(t);
}

GaloisField::value_type GaloisField::from_long(long v) const {
  const long p = tables_->p;
  long r = v % p;
  if (r < 0) r += p;
  return static_cast<value_type>(r);
}

GaloisField::value_type GaloisField::from_fraction(const Fraction& f) const {
  mpz_class r;
  const mpz_class p(tables_->p);
  mpz_fdiv_r(r.get_mpz_t(), f.den().get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw PointCollision("denominator of " + f.str() + " vanishes in " + spec().str());
  const value_type den = static_cast<value_type>(r.get_ui());
  mpz_fdiv_r(r.get_mpz_t(), f.num().get_mpz_t(), p.get_mpz_t());
  return mul(static_cast<value_type>(r.get_ui()), inv(den));
}

GaloisField::value_type GaloisField::add(value_type a, value_type b) const {
  const std::uint32_t p = tables_->p;
  if (p == 2) return a ^ b;
  value_type out = 0, scale = 1;
  while (a || b) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

GaloisField::value_type GaloisField::neg(value_type a) const {
  const std::uint32_t p = tables_->p;
  if (p == 2) return a;
  value_type out = 0, scale = 1;
  while (a) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

GaloisField::value_type GaloisField::inv(value_type a) const {
  if (a == 0) throw InternalError("inverse of zero");
  const auto& t = *tables_;
  const std::uint32_t e = t.log[a];
  return t.exp[e == 0 ? 0 : (t.q - 1 - e)];
}

std::string GaloisField::str(value_type a) const {
  if (a == 0) return "0";
  return "g^" + std::to_string(tables_->log[a]);
}

}  // namespace canring
