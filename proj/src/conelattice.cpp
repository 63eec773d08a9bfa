#include "canring/conelattice.hpp"

#include <algorithm>
#include <numeric>

#include "canring/errors.hpp"
#include "canring/exactla.hpp"

namespace canring {

namespace {

// All vectors x with lo_i <= x_i <= hi_i and sum x_i = total, in lex order.
void box_with_sum(const std::vector<long>& lo, const std::vector<long>& hi, long total, std::vector<long>& cur,
                  std::vector<std::vector<long>>& out) {
  const std::size_t i = cur.size();
  if (i == lo.size()) {
    if (total == 0) out.push_back(cur);
    return;
  }
  long rest_lo = 0, rest_hi = 0;
  for (std::size_t j = i + 1; j < lo.size(); ++j) {
    rest_lo += lo[j];
    rest_hi += hi[j];
  }
  const long from = std::max(lo[i], total - rest_hi);
  const long to = std::min(hi[i], total - rest_lo);
  for (long x = from; x <= to; ++x) {
    cur.push_back(x);
    box_with_sum(lo, hi, total - x, cur, out);
    cur.pop_back();
  }
}

// Number of vectors x with lo_i <= x_i <= hi_i and sum x_i = 0.
mpz_class box_count(const std::vector<long>& lo, const std::vector<long>& hi) {
  long base = 0;
  for (long x : lo) base += x;
  // ways[s] counts partial vectors whose sum exceeds the lower sum by s
  std::vector<mpz_class> ways{1};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    const std::size_t width = static_cast<std::size_t>(hi[i] - lo[i]);
    std::vector<mpz_class> prefix(ways.size() + 1, 0);
    for (std::size_t s = 0; s < ways.size(); ++s) prefix[s + 1] = prefix[s] + ways[s];
    std::vector<mpz_class> next(ways.size() + width);
    for (std::size_t s = 0; s < next.size(); ++s) {
      const std::size_t top = std::min(s, ways.size() - 1);
      const std::size_t bottom = s >= width ? s - width : 0;
      if (bottom <= top) next[s] = prefix[top + 1] - prefix[bottom];
    }
    ways = std::move(next);
  }
  if (base > 0 || static_cast<std::size_t>(-base) >= ways.size()) return 0;
  return ways[static_cast<std::size_t>(-base)];
}

// Box of c-vectors for the cube points of degree d.
void cube_box(const QDivisor& D, const DenominatorData& dd, long d, std::vector<long>& lo, std::vector<long>& hi) {
  const std::size_t n = D.size();
  lo.assign(n, 0);
  hi.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Fraction da = Fraction(d) * D.alpha(i);
    lo[i] = to_long((-da).ceil());
    hi[i] = to_long((Fraction(dd.ell_i[i]) * dd.deg_D - da).ceil()) - 1;
  }
}

Matrix<RationalField> ray_matrix(const ConeModel& model) {
  const std::size_t n = model.rays.size();
  Matrix<RationalField> m(RationalField{}, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = model.rays[i].d;
    for (std::size_t j = 0; j + 1 < n; ++j) m(i, j + 1) = model.rays[i].c[j];
  }
  return m;
}

}  // namespace

GradedMonomial& GradedMonomial::operator+=(const GradedMonomial& o) {
  if (c.size() != o.c.size()) throw InputError("monomials of different lengths");
  d += o.d;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

bool in_cone(const QDivisor& divisor, const GradedMonomial& m) {
  const QDivisor D = divisor.with_ghost_point();
  if (m.c.size() != D.size() || m.d < 0) return false;
  if (std::accumulate(m.c.begin(), m.c.end(), 0L) != 0) return false;
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (Fraction(m.c[i]) < -(Fraction(m.d) * D.alpha(i))) return false;
  }
  return true;
}

std::vector<GradedMonomial> monomial_spanning_set(const QDivisor& divisor, long d) {
  const QDivisor D = divisor.with_ghost_point();
  if (d < 0) return {};
  const auto b = floor_divisor(D, d);
  std::vector<long> lo, hi;
  const long r = std::accumulate(b.begin(), b.end(), 0L);
  if (r < 0) return {};
  for (long bi : b) {
    lo.push_back(-bi);
    hi.push_back(-bi + r);
  }
  std::vector<std::vector<long>> cs;
  std::vector<long> cur;
  box_with_sum(lo, hi, 0, cur, cs);
  std::vector<GradedMonomial> out;
  out.reserve(cs.size());
  for (auto& c : cs) out.push_back({d, std::move(c)});
  return out;
}

std::vector<GradedMonomial> monomial_basis(const QDivisor& divisor, long d) {
  const QDivisor D = divisor.with_ghost_point();
  if (d < 0) return {};
  const auto b = floor_divisor(D, d);
  const long r = std::accumulate(b.begin(), b.end(), 0L);
  std::vector<GradedMonomial> out;
  for (long a = 0; a <= r; ++a) {
    GradedMonomial m{d, std::vector<long>(b.size())};
    for (std::size_t i = 2; i < b.size(); ++i) m.c[i] = -b[i];
    m.c[0] = -b[0] + a;
    m.c[1] = -b[1] + (r - a);
    out.push_back(std::move(m));
  }
  return out;
}

ConeModel build_cone_model(const QDivisor& divisor) {
  if (divisor.degree().sign() <= 0) throw Unsupported("cone model needs deg D > 0");
  const QDivisor D = divisor.with_ghost_point();
  const auto dd = denominator_data(D);
  const std::size_t n = D.size();
  ConeModel model{D, {}, {}, {}, {}};

  for (std::size_t i = 0; i < n; ++i) {
    const long li = dd.ell_i[i];
    GradedMonomial e{li, std::vector<long>(n)};
    for (std::size_t j = 0; j < n; ++j) {
      const Fraction v = j == i ? (dd.deg_D - D.alpha(j)) * Fraction(li) : -D.alpha(j) * Fraction(li);
      if (!v.is_integer()) throw InternalError("ray coordinate is not integral");
      e.c[j] = to_long(v.num());
    }
    model.rays.push_back(std::move(e));
  }

  const mpz_class count = cube_point_count(D);
  if (count > kMaxCubePoints) {
    throw Unsupported("fundamental cube has " + count.get_str() + " points, more than can be listed");
  }
  const long sum_ell = std::accumulate(dd.ell_i.begin(), dd.ell_i.end(), 0L);
  for (long d = 1; d < sum_ell; ++d) {
    std::vector<long> lo, hi;
    cube_box(D, dd, d, lo, hi);
    std::vector<std::vector<long>> cs;
    std::vector<long> cur;
    box_with_sum(lo, hi, 0, cur, cs);
    for (auto& c : cs) model.cube_points.push_back({d, std::move(c)});
  }

  model.epsilon.push_back(Fraction(1) / dd.deg_D);
  for (const auto& a : D.alphas()) model.epsilon.push_back(-a / dd.deg_D);

  const auto inv = inverse(ray_matrix(model));
  if (!inv) throw InternalError("ray matrix is singular");
  model.ray_inverse.assign(n, std::vector<Fraction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) model.ray_inverse[i][j] = Fraction((*inv)(i, j));
  }
  return model;
}

mpz_class cube_point_count(const QDivisor& divisor) {
  if (divisor.degree().sign() <= 0) throw Unsupported("cone model needs deg D > 0");
  const QDivisor D = divisor.with_ghost_point();
  const auto dd = denominator_data(D);
  const long sum_ell = std::accumulate(dd.ell_i.begin(), dd.ell_i.end(), 0L);
  mpz_class total = 0;
  std::vector<long> lo, hi;
  for (long d = 1; d < sum_ell; ++d) {
    cube_box(D, dd, d, lo, hi);
    total += box_count(lo, hi);
  }
  return total;
}

std::vector<GradedMonomial> semigroup_generators(const ConeModel& model) {
  auto out = model.rays;
  out.insert(out.end(), model.cube_points.begin(), model.cube_points.end());
  return out;
}

std::vector<Fraction> epsilon_vector(const ConeModel& model) { return model.epsilon; }

std::vector<Fraction> barycentric_coordinates(const ConeModel& model, const GradedMonomial& m) {
  const std::size_t n = model.rays.size();
  if (m.c.size() != n) throw InputError("monomial length does not match the cone");
  std::vector<Fraction> p(n);
  p[0] = Fraction(m.d);
  for (std::size_t j = 0; j + 1 < n; ++j) p[j + 1] = Fraction(m.c[j]);
  std::vector<Fraction> a(n, Fraction(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) a[i] += p[k] * model.ray_inverse[k][i];
  }
  return a;
}

Fraction ray_determinant(const ConeModel& model) { return abs(Fraction(determinant(ray_matrix(model)))); }

std::optional<ConeDecomposition> decompose(const ConeModel& model, const GradedMonomial& m) {
  if (!in_cone(model.divisor, m)) return std::nullopt;
  const auto a = barycentric_coordinates(model, m);
  ConeDecomposition out;
  GradedMonomial rest = m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long k = to_long(a[i].floor());
    out.ray_multiples.push_back(k);
    rest.d -= k * model.rays[i].d;
    for (std::size_t j = 0; j < rest.c.size(); ++j) rest.c[j] -= k * model.rays[i].c[j];
  }
  if (rest.d == 0) {
    for (long x : rest.c) {
      if (x != 0) return std::nullopt;
    }
    return out;
  }
  for (std::size_t j = 0; j < model.cube_points.size(); ++j) {
    if (model.cube_points[j] == rest) {
      out.cube_index = j;
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace canring
