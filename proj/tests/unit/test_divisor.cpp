#include <doctest.h>

#include <numeric>
#include <random>

#include "canring/divisor.hpp"
#include "canring/errors.hpp"
#include "canring/field.hpp"
#include "oracles.hpp"

using namespace canring;

namespace {

Fraction F(const char* s) { return Fraction::parse(s); }

QDivisor D(std::initializer_list<const char*> alphas) {
  std::vector<Fraction> a;
  for (auto x : alphas) a.push_back(F(x));
  return QDivisor::from_alphas(a);
}

}  // namespace

TEST_CASE("points and divisors") {
  CHECK(PointP1::parse("inf").is_infinity());
  CHECK(PointP1::parse("-3/7") == PointP1::rational(F("-3/7")));
  CHECK(PointP1::parse("g^4") == PointP1::generator_power(4));
  CHECK(PointP1::parse("g^4").str() == "g^4");
  CHECK_THROWS_AS(PointP1::parse("x"), InputError);

  const auto pts = default_points(4);
  CHECK(pts == std::vector<PointP1>{PointP1::infinity(), PointP1::rational(0), PointP1::rational(1),
                                    PointP1::rational(2)});
  CHECK(D({"-1/2", "1/3", "1/5"}).degree() == F("1/30"));
  CHECK_THROWS_AS(QDivisor({PointP1::infinity(), PointP1::infinity()}, {F("1"), F("2")}), InputError);
  CHECK_THROWS_AS(QDivisor({PointP1::infinity()}, {F("1"), F("2")}), InputError);

  const auto one = QDivisor::from_alphas({F("13/5")}).with_ghost_point();
  CHECK(one.size() == 2);
  CHECK(one.alpha(1) == Fraction(0));
  CHECK(one.points()[1] == PointP1::rational(0));
}

TEST_CASE("floor divisor and graded dimension") {
  const auto d235 = D({"-1/2", "1/3", "1/5"});
  CHECK(floor_divisor(d235, 6) == std::vector<long>{-3, 2, 1});
  CHECK(floor_divisor(d235, 0) == std::vector<long>{0, 0, 0});
  CHECK(floor_divisor(D({"13/5", "-1/4"}), 4) == std::vector<long>{10, -1});
  CHECK(graded_dim(d235, 30) == 2);
  CHECK(graded_dim(d235, 5) == 0);
  CHECK(graded_dim(d235, 0) == 1);
  for (long d = 1; d <= 5; ++d) CHECK(graded_dim(D({"13/5"}), d) == (13 * d) / 5 + 1);

  std::mt19937_64 rng(2);
  for (int it = 0; it < 200; ++it) {
    std::vector<Fraction> a;
    for (int i = 0; i < 3; ++i) a.push_back(oracle::random_fraction(rng, 9, 2));
    const auto div = QDivisor::from_alphas(a);
    const long d = static_cast<long>(rng() % 40);
    long r = 0;
    for (const auto& x : a) r += to_long(oracle::floor_div(x.num() * d, x.den()));
    CHECK(floor_degree(div, d) == r);
    CHECK(graded_dim(div, d) == std::max(r + 1, 0L));
  }
}

TEST_CASE("denominator data and degree bounds") {
  const auto b = degree_bounds(D({"-1/2", "1/3", "1/5"}));
  CHECK(b.gen_bound == 31);
  CHECK(b.rel_bound == 62);
  const auto dd = denominator_data(D({"13/5", "-1/4"}));
  CHECK(dd.ell == 20);
  CHECK(dd.ell_i == std::vector<long>{4, 5});
  CHECK(degree_bounds(D({"13/5", "-1/4"})).gen_bound == 9);
  CHECK_THROWS_AS(degree_bounds(D({"-1/2", "1/3"})), Unsupported);
  CHECK_THROWS_AS(degree_bounds(D({"1/2", "-1/2"})), Unsupported);

  CHECK(semigroup_count_bound(D({"-1/2", "1/3", "1/5"})) == 3);
  CHECK(semigroup_count_bound(D({"1", "0"})) == 2);
  CHECK(semigroup_count_bound(D({"13/5", "-1/4"})) == 48);
}

TEST_CASE("field specs") {
  CHECK(FieldSpec::with_at_least(2, 32) == FieldSpec::galois(2, 5));
  CHECK(FieldSpec::with_at_least(3, 32) == FieldSpec::galois(3, 4));
  CHECK(FieldSpec::with_at_least(7, 32) == FieldSpec::galois(7, 2));
  CHECK(FieldSpec::with_at_least(37, 32) == FieldSpec::prime(37));
  CHECK(FieldSpec::with_at_least(0, 32) == FieldSpec::rationals());
  CHECK(FieldSpec::galois(2, 5).str() == "GF(2^5)");
  CHECK_THROWS_AS(FieldSpec::prime(9).validate(), InputError);
  CHECK_THROWS_AS(FieldSpec::galois(2, 17).validate(), InputError);
}

TEST_CASE("finite field arithmetic") {
  const PrimeField f7(7);
  for (std::uint64_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
  CHECK(f7.from_fraction(F("1/2")) == 4);
  CHECK(f7.from_long(-1) == 6);
  CHECK_THROWS_AS(f7.from_fraction(F("1/7")), PointCollision);

  for (auto [p, k] : {std::pair{2u, 5u}, std::pair{3u, 4u}, std::pair{7u, 2u}}) {
    const GaloisField gf(p, k);
    const auto q = gf.order();
    // the generator has full order and inverses are inverses
    std::vector<char> seen(q, 0);
    for (std::uint64_t e = 0; e + 1 < q; ++e) seen[gf.generator_power(e)] = 1;
    CHECK(std::accumulate(seen.begin(), seen.end(), 0) == static_cast<int>(q - 1));
    for (std::uint32_t a = 1; a < q; ++a) {
      CHECK(gf.mul(a, gf.inv(a)) == 1);
      CHECK(gf.add(a, gf.neg(a)) == 0);
    }
    // distributivity on a sample
    for (std::uint32_t a = 0; a < q; a += 3) {
      for (std::uint32_t b = 1; b < q; b += 5) {
        const std::uint32_t c = (a + b) % q;
        CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      }
    }
  }
}
