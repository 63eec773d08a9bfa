#include "canring/twopoint.hpp"

#include <algorithm>

#include "canring/errors.hpp"

namespace canring {

std::vector<long> TwoPointPresentation::generator_degrees() const {
  std::vector<long> out;
  for (const auto& v : generators) out.push_back(to_long(v.d));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> TwoPointPresentation::relation_degrees() const {
  std::vector<long> out;
  for (const auto& rel : relations) out.push_back(to_long(generator(rel.i).d + generator(rel.j).d));
  std::sort(out.begin(), out.end());
  return out;
}

TwoPointPresentation two_point_presentation(const Fraction& alpha, const Fraction& beta) {
  TwoPointPresentation p;
  p.alpha = alpha;
  p.beta = beta;
  const Fraction deg = alpha + beta;
  if (deg.sign() < 0) {
    p.kind = RingKind::trivial;
    return p;
  }
  p.kind = deg.sign() == 0 ? RingKind::polynomial : RingKind::general;

  const Fraction seed = minimal_denominator_in_interval(-beta, alpha);
  const auto lower = best_lower_approximations(alpha, seed);
  const auto upper = best_upper_approximations(-beta, seed);
  p.r = static_cast<long>(lower.size()) - 1;
  p.s = static_cast<long>(upper.size()) - 1;
  for (std::size_t k = upper.size(); k-- > 1;) p.generators.push_back(LatticeVec2::of(upper.entries[k]));
  for (const auto& f : lower.entries) p.generators.push_back(LatticeVec2::of(f));

  for (long i = -p.s; i <= p.r; ++i) {
    for (long j = i + 2; j <= p.r; ++j) {
      const LatticeVec2 w{p.generator(i).d + p.generator(j).d, p.generator(i).c + p.generator(j).c};
      // largest h in [i, j-1] with slope(v_h) <= slope(w)
      long lo = i, hi = j - 1;
      while (lo < hi) {
        const long mid = lo + (hi - lo + 1) / 2;
        if (cross(p.generator(mid), w) >= 0) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      const long h = lo;
      // v_h, v_{h+1} is a positively oriented basis, so Cramer's rule is exact
      TwoPointRelation rel{i, j, h, cross(w, p.generator(h + 1)), cross(p.generator(h), w)};
      if (rel.a <= 0 || rel.b < 0 || h <= i) {
        throw InternalError("two_point_presentation: relation outside the expected cone");
      }
      p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

bool verify_presentation(const TwoPointPresentation& p) {
  const long count = static_cast<long>(p.generators.size());
  if (p.kind == RingKind::trivial) return count == 0 && p.relations.empty();
  if (count != p.r + p.s + 1) return false;
  for (long i = -p.s; i < p.r; ++i) {
    if (cross(p.generator(i), p.generator(i + 1)) != 1) return false;
  }
  const long n = p.r + p.s;
  if (static_cast<long>(p.relations.size()) != n * (n - 1) / 2) return false;
  for (const auto& rel : p.relations) {
    if (rel.j < rel.i + 2 || rel.h <= rel.i || rel.h >= rel.j) return false;
    if (rel.a < 1 || rel.b < 0) return false;
    if (rel.b > 0 && rel.h + 1 >= rel.j) return false;
    const auto& vi = p.generator(rel.i);
    const auto& vj = p.generator(rel.j);
    const auto& vh = p.generator(rel.h);
    LatticeVec2 rhs{rel.a * vh.d, rel.a * vh.c};
    if (rel.b > 0) {
      const auto& vh1 = p.generator(rel.h + 1);
      rhs.d += rel.b * vh1.d;
      rhs.c += rel.b * vh1.c;
    }
    if (vi.d + vj.d != rhs.d || vi.c + vj.c != rhs.c) return false;
  }
  return true;
}

}  // namespace canring
