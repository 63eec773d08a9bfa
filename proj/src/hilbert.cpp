#include "hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "canring/errors.hpp"

namespace canring::detail {

namespace {

using Mono = std::vector<long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b, long shift = 0, long sign = 1) {
  Poly out(std::max(a.size(), b.size() + static_cast<std::size_t>(shift)), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(shift)] += sign * b[i];
  trim(out);
  return out;
}

Poly times_one_minus(const Poly& p, long w) {
  return add(p, p, w, -1);
}

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

std::vector<Mono> minimalize(std::vector<Mono> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Mono> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

long degree(const Mono& m, const std::vector<long>& w) {
  long d = 0;
  for (std::size_t k = 0; k < m.size(); ++k) d += m[k] * w[k];
  return d;
}

Poly numerator(std::vector<Mono> gens, const std::vector<long>& w) {
  gens = minimalize(std::move(gens));
  const std::size_t N = w.size();
  std::vector<int> uses(N, 0);
  for (const auto& g : gens) {
    for (std::size_t k = 0; k < N; ++k) uses[k] += g[k] > 0;
  }
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < N; ++k) {
    if (uses[k] > uses[pivot]) pivot = k;
  }
  // pairwise disjoint supports: a complete intersection
  if (gens.empty() || uses[pivot] <= 1) {
    Poly out{1};
    for (const auto& g : gens) out = times_one_minus(out, degree(g, w));
    return out;
  }
  // N(J) = N(J + p) + t^deg(p) N(J : p), p a power of the busiest variable.
  // The exponent is taken among generators mixing the pivot with other
  // variables; a pure pivot power in J is larger, so p is not in J.
  std::vector<long> exps;
  for (const auto& g : gens) {
    if (g[pivot] > 0 && degree(g, w) != g[pivot] * w[pivot]) exps.push_back(g[pivot]);
  }
  std::nth_element(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(exps.size() / 2), exps.end());
  const long e = exps[exps.size() / 2];
  Mono p(N, 0);
  p[pivot] = e;

  auto sum = gens;
  sum.push_back(p);
  std::vector<Mono> colon;
  for (auto g : gens) {
    g[pivot] = std::max(0L, g[pivot] - e);
    colon.push_back(std::move(g));
  }
  return add(numerator(std::move(sum), w), numerator(std::move(colon), w), e * w[pivot]);
}

}  // namespace

Poly monomial_quotient_numerator(std::vector<std::vector<long>> gens, const std::vector<long>& weights) {
  for (const auto& g : gens) {
    if (g.size() != weights.size()) throw InternalError("monomial has the wrong number of variables");
  }
  return numerator(std::move(gens), weights);
}

Poly ring_numerator(const QDivisor& D, const std::vector<long>& weights) {
  const Fraction deg = D.degree();
  if (deg.sign() <= 0) throw Unsupported("ring numerator needs deg D > 0");
  long L = 1;
  for (const auto& a : D.alphas()) L = std::lcm(L, to_long(a.den()));
  // dim S_d = max(0, r(d) + 1) and r(d + L) = r(d) + L deg D, so past d0
  // the series is (affine in d on each residue class mod L)
  const long d0 = to_long((Fraction(static_cast<long>(D.size()) + 1) / deg).ceil()) + 1;
  const long wsum = std::accumulate(weights.begin(), weights.end(), 0L);
  const long top = d0 + 2 * L + wsum + 1;
  Poly h(static_cast<std::size_t>(top + 1), 0);
  for (long d = 0; d <= top; ++d) h[static_cast<std::size_t>(d)] = std::max(0L, floor_degree(D, d) + 1);
  // A = h (1 - t^L)^2 is a polynomial of degree < d0 + 2L
  Poly a = times_one_minus(times_one_minus(h, L), L);
  a.resize(std::min(a.size(), static_cast<std::size_t>(d0 + 2 * L)));
  trim(a);
  Poly p = a;
  for (long w : weights) p = times_one_minus(p, w);
  // divide twice by 1 - t^L
  for (int pass = 0; pass < 2; ++pass) {
    Poly q(p.size(), 0);
    Poly rem = p;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      q[i] = rem[i];
      if (i + static_cast<std::size_t>(L) < rem.size()) {
        rem[i + static_cast<std::size_t>(L)] += rem[i];
      } else if (rem[i] != 0) {
        throw InternalError("Hilbert numerator of S_D is not a polynomial");
      }
    }
    trim(q);
    p = std::move(q);
  }
  return p;
}

}  // namespace canring::detail
