#include "canring/divisor.hpp"

#include <algorithm>
#include <numeric>

#include "canring/errors.hpp"

namespace canring {

PointP1 PointP1::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  if (text.starts_with("g^")) {
    const auto e = Fraction::parse(text.substr(2));
    if (!e.is_integer() || e.sign() < 0) throw InputError("bad generator power: " + std::string(text));
    return generator_power(e.num().get_ui());
  }
  return rational(Fraction::parse(text));
}

std::string PointP1::str() const {
  switch (kind_) {
    case Kind::infinity:
      return "inf";
    case Kind::rational:
      return value_.str();
    case Kind::generator_power:
      return "g^" + std::to_string(exponent_);
  }
  return {};
}

QDivisor::QDivisor(std::vector<PointP1> points, std::vector<Fraction> alphas)
    : points_(std::move(points)), alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw InputError("divisor needs at least one point");
  if (points_.size() != alphas_.size()) {
    throw InputError("divisor has " + std::to_string(points_.size()) + " points but " +
                     std::to_string(alphas_.size()) + " coefficients");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) throw InputError("repeated point " + points_[i].str());
    }
  }
}

std::vector<PointP1> default_points(std::size_t n) {
  std::vector<PointP1> pts;
  pts.reserve(n);
  if (n > 0) pts.push_back(PointP1::infinity());
  for (std::size_t i = 1; i < n; ++i) pts.push_back(PointP1::rational(Fraction(long(i) - 1)));
  return pts;
}

QDivisor QDivisor::from_alphas(std::vector<Fraction> alphas) {
  auto pts = default_points(alphas.size());
  return QDivisor(std::move(pts), std::move(alphas));
}

Fraction QDivisor::degree() const {
  Fraction s(0);
  for (const auto& a : alphas_) s += a;
  return s;
}

QDivisor QDivisor::moved_to(std::vector<PointP1> points) const { return QDivisor(std::move(points), alphas_); }

QDivisor QDivisor::with_ghost_point() const {
  if (size() != 1) return *this;
  PointP1 ghost = PointP1::infinity();
  for (long v = -1; points_.front() == ghost; ++v) ghost = PointP1::rational(Fraction(v + 1));
  return QDivisor({points_.front(), ghost}, {alphas_.front(), Fraction(0)});
}

DenominatorData denominator_data(const QDivisor& divisor) {
  const QDivisor D = divisor.with_ghost_point();
  DenominatorData out;
  out.deg_D = D.degree();
  std::vector<mpz_class> q;
  for (const auto& a : D.alphas()) q.push_back(a.den());
  mpz_class all = 1;
  for (const auto& x : q) all = lcm(all, x);
  out.ell = to_long(all);
  for (std::size_t i = 0; i < q.size(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j != i) l = lcm(l, q[j]);
    }
    out.ell_i.push_back(to_long(l));
  }
  return out;
}

std::vector<long> floor_divisor(const QDivisor& D, long d) {
  std::vector<long> b;
  b.reserve(D.size());
  for (const auto& a : D.alphas()) b.push_back(to_long((Fraction(d) * a).floor()));
  return b;
}

long floor_degree(const QDivisor& D, long d) {
  const auto b = floor_divisor(D, d);
  return std::accumulate(b.begin(), b.end(), 0L);
}

long graded_dim(const QDivisor& D, long d) {
  if (d < 0) return 0;
  return std::max(floor_degree(D, d) + 1, 0L);
}

DegreeBounds degree_bounds(const QDivisor& D) {
  if (D.degree().sign() <= 0) throw Unsupported("degree bounds need deg D > 0");
  const auto dd = denominator_data(D);
  const long sum = std::accumulate(dd.ell_i.begin(), dd.ell_i.end(), 0L);
  return {sum, std::max(dd.ell + sum, 2 * sum)};
}

mpz_class semigroup_count_bound(const QDivisor& divisor) {
  if (divisor.degree().sign() <= 0) throw Unsupported("semigroup count bound needs deg D > 0");
  const QDivisor D = divisor.with_ghost_point();
  const auto dd = denominator_data(D);
  Fraction value(1);
  for (long l : dd.ell_i) value *= Fraction(l);
  for (std::size_t i = 0; i + 1 < D.size(); ++i) value *= dd.deg_D;
  return mpz_class(long(D.size()) - 1) + value.ceil();
}

}  // namespace canring
