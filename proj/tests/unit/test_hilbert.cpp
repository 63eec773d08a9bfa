#include <doctest.h>

#include <random>

#include "canring/divisor.hpp"
#include "hilbert.hpp"
#include "oracles.hpp"

using namespace canring;
using canring::detail::Poly;

namespace {

// Power series times prod (1 - t^w), truncated at degree top.
Poly times_weights(Poly series, const std::vector<long>& w, long top) {
  series.resize(static_cast<std::size_t>(top + 1), 0);
  for (long x : w) {
    for (long i = top; i >= x; --i) series[static_cast<std::size_t>(i)] -= series[static_cast<std::size_t>(i - x)];
  }
  return series;
}

// Hilbert function of k[x]/J by enumerating monomials.
Poly quotient_series(const std::vector<std::vector<long>>& gens, const std::vector<long>& w, long top) {
  Poly h(static_cast<std::size_t>(top + 1), 0);
  std::vector<long> m(w.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, long deg) -> void {
    if (k == w.size()) {
      for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t i = 0; i < g.size(); ++i) divides = divides && g[i] <= m[i];
        if (divides) return;
      }
      ++h[static_cast<std::size_t>(deg)];
      return;
    }
    for (long e = 0; deg + e * w[k] <= top; ++e) {
      m[k] = e;
      self(self, k + 1, deg + e * w[k]);
    }
    m[k] = 0;
  };
  rec(rec, 0, 0);
  return h;
}

Poly padded(Poly p, long top) {
  p.resize(static_cast<std::size_t>(top + 1), 0);
  return p;
}

}  // namespace

TEST_CASE("numerators of small monomial ideals") {
  CHECK(detail::monomial_quotient_numerator({}, {1, 1}) == Poly{1});
  CHECK(detail::monomial_quotient_numerator({{2}}, {1}) == Poly{1, 0, -1});
  CHECK(detail::monomial_quotient_numerator({{1, 1}}, {2, 3}) == Poly{1, 0, 0, 0, 0, -1});
  CHECK(detail::monomial_quotient_numerator({{0, 0}}, {1, 1}).empty());
}

TEST_CASE("monomial ideal numerators match enumeration") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 80; ++it) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<long> w(n);
    for (auto& x : w) x = 1 + static_cast<long>(rng() % 3);
    std::vector<std::vector<long>> gens(1 + rng() % 6, std::vector<long>(n));
    for (auto& g : gens) {
      for (auto& e : g) e = static_cast<long>(rng() % 4);
    }
    const long top = 40;
    const auto expected = times_weights(quotient_series(gens, w, top), w, top);
    const auto got = detail::monomial_quotient_numerator(gens, w);
    REQUIRE(static_cast<long>(got.size()) <= top);
    CHECK(padded(got, top) == expected);
  }
}

TEST_CASE("ring numerators match the graded dimensions") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 60; ++it) {
    std::vector<Fraction> a;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) a.push_back(oracle::random_fraction(rng, 6, 2));
    const auto div = QDivisor::from_alphas(a);
    if (div.degree().sign() <= 0) continue;
    // the series is a polynomial over k[x] once (1 - t^L)^2 divides prod (1 - t^w)
    const long L = denominator_data(div).ell;
    std::vector<long> w{L, 2 * L};
    for (std::size_t k = 0, extra = rng() % 3; k < extra; ++k) w.push_back(1 + static_cast<long>(rng() % 6));
    const auto got = detail::ring_numerator(div, w);
    const long top = static_cast<long>(got.size()) + 200;
    Poly h(static_cast<std::size_t>(top + 1));
    for (long d = 0; d <= top; ++d) h[static_cast<std::size_t>(d)] = graded_dim(div, d);
    CHECK(padded(got, top) == times_weights(h, w, top));
  }
}
