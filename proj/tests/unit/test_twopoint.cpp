#include <doctest.h>

#include <random>

#include "canring/twopoint.hpp"
#include "oracles.hpp"

using namespace canring;

namespace {

Fraction F(const char* s) { return Fraction::parse(s); }

std::vector<LatticeVec2> vecs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<LatticeVec2> out;
  for (auto [d, c] : xs) out.push_back({d, c});
  return out;
}

const TwoPointRelation* find(const TwoPointPresentation& p, long i, long j) {
  for (const auto& r : p.relations) {
    if (r.i == i && r.j == j) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("one point 13/5") {
  const auto p = two_point_presentation(F("13/5"), Fraction(0));
  CHECK(p.kind == RingKind::general);
  CHECK(p.generators == vecs({{1, 0}, {1, 1}, {1, 2}, {2, 5}, {5, 13}}));
  CHECK(p.relations.size() == 6);
  // f0 f2 = f1^2, f1 f3 = f2^3, f2 f4 = f3^3
  for (auto [i, a] : {std::pair{0L, 2L}, std::pair{1L, 3L}, std::pair{2L, 3L}}) {
    const auto* r = find(p, i, i + 2);
    REQUIRE(r);
    CHECK(r->h == i + 1);
    CHECK(r->a == a);
    CHECK(r->b == 0);
  }
  CHECK(verify_presentation(p));
}

TEST_CASE("two points 13/5, -1/4") {
  const auto p = two_point_presentation(F("13/5"), F("-1/4"));
  CHECK(p.s == 3);
  CHECK(p.r == 3);
  CHECK(p.generators == vecs({{4, 1}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {2, 5}, {5, 13}}));
  CHECK(p.generator_degrees() == std::vector<long>{1, 1, 2, 2, 3, 4, 5});
  CHECK(p.relations.size() == 15);
  CHECK(verify_presentation(p));
}

TEST_CASE("degenerate two-point rings") {
  const auto poly = two_point_presentation(F("1"), Fraction(0));
  CHECK(poly.generators == vecs({{1, 0}, {1, 1}}));
  CHECK(poly.relations.empty());
  CHECK(verify_presentation(poly));

  const auto trivial = two_point_presentation(F("1/2"), F("-2/3"));
  CHECK(trivial.kind == RingKind::trivial);
  CHECK(trivial.generators.empty());
  CHECK(verify_presentation(trivial));

  const auto zero = two_point_presentation(F("2/3"), F("-2/3"));
  CHECK(zero.kind == RingKind::polynomial);
  CHECK(zero.generators == vecs({{3, 2}}));
}

TEST_CASE("verification rejects a broken relation") {
  auto p = two_point_presentation(F("13/5"), Fraction(0));
  REQUIRE(verify_presentation(p));
  p.relations[0].a -= 1;
  CHECK_FALSE(verify_presentation(p));
}

TEST_CASE("random two-point presentations verify") {
  std::mt19937_64 rng(21);
  int general = 0;
  for (int it = 0; it < 200; ++it) {
    const Fraction a = oracle::random_fraction(rng, 40, 3), b = oracle::random_fraction(rng, 40, 3);
    CAPTURE(a.str());
    CAPTURE(b.str());
    const auto p = two_point_presentation(a, b);
    CHECK(verify_presentation(p));
    if (p.kind != RingKind::general) continue;
    ++general;
    // consecutive generators are the best approximations on each side of the seed
    CHECK(p.generator(0).slope() == minimal_denominator_in_interval(-b, a));
    CHECK(p.generators.back().slope() == a);
    CHECK(p.generators.front().slope() == -b);
  }
  CHECK(general >= 50);
}
