#include "canring/fraction.hpp"

#include <cctype>
#include <ostream>

#include "canring/errors.hpp"

namespace canring {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw InputError("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Fraction::Fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("fraction with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Fraction::Fraction(mpq_class value) : q_(std::move(value)) {
  if (q_.get_den() == 0) throw InputError("fraction with zero denominator");
  q_.canonicalize();
}

Fraction Fraction::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("sign belongs on the numerator: '" + std::string(text) + "'");
  }
  return Fraction(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

mpz_class Fraction::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

mpz_class Fraction::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

std::string Fraction::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Fraction& Fraction::operator+=(const Fraction& o) {
  q_ += o.q_;
  return *this;
}
Fraction& Fraction::operator-=(const Fraction& o) {
  q_ -= o.q_;
  return *this;
}
Fraction& Fraction::operator*=(const Fraction& o) {
  q_ *= o.q_;
  return *this;
}
Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.q_ == 0) throw InputError("division by zero fraction");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Fraction abs(const Fraction& f) { return f.sign() < 0 ? -f : f; }

long to_long(const mpz_class& z) {
  if (!z.fits_slong_p()) throw InputError("integer out of machine range: " + z.get_str());
  return z.get_si();
}

}  // namespace canring
