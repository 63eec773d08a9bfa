// Brute-force recomputation of generator and minimal relation degrees.
// Sections are polynomials in the affine coordinate t, the factor of a point
// at infinity being 1; products are formed naively from basis sections and
// relations come from kernels on the full space of x-monomials.

#include <algorithm>
#include <map>

#include "canring/exactla.hpp"
#include "canring/presentation.hpp"
#include "engine.hpp"

namespace canring {

namespace {

constexpr long kMaxDim = 40;
constexpr std::size_t kMaxMonomials = 2500;

template <ExactField F>
class Oracle {
 public:
  using Poly = Vec<F>;

  Oracle(const F& field, const QDivisor& D) : field_(field) {
    auto [aug, forms] = detail::realize(field, D);
    D_ = std::move(aug);
    for (const auto& f : forms) {
      finite_.push_back(!field.is_zero(f.t_coeff));
      factor_.push_back(Poly{f.w_coeff, f.t_coeff});
    }
  }

  long r(long d) const {
    const auto b = floor_divisor(D_, d);
    long s = 0;
    for (long x : b) s += x;
    return s;
  }

  Poly times(const Poly& a, const Poly& b) const {
    Poly out(a.size() + b.size() - 1, field_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = field_.add(out[i + j], field_.mul(a[i], b[j]));
    }
    return out;
  }

  Poly pad(Poly p, long d) const {
    const auto size = static_cast<std::size_t>(r(d) + 1);
    while (p.size() > size) {
      if (!field_.is_zero(p.back())) throw InternalError("oracle section exceeds the degree bound");
      p.pop_back();
    }
    p.resize(size, field_.zero());
    return p;
  }

  // prod over finite points of t_i^{e_i}
  Poly affine(const std::vector<long>& e) const {
    Poly out{field_.one()};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw InternalError("negative exponent in the oracle");
      if (!finite_[i]) continue;
      for (long k = 0; k < e[i]; ++k) out = times(out, factor_[i]);
    }
    return out;
  }

  Poly section(const GradedMonomial& m) const {
    const auto b = floor_divisor(D_, m.d);
    std::vector<long> e(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) e[i] = m.c[i] + b[i];
    return pad(affine(e), m.d);
  }

  // Product of s in S_c and s' in S_{d-c}, in S_d coordinates.
  Poly product(const Poly& s, long c, const Poly& s2, long c2) const {
    const auto bc = floor_divisor(D_, c);
    const auto bc2 = floor_divisor(D_, c2);
    const auto bd = floor_divisor(D_, c + c2);
    std::vector<long> delta(bd.size());
    for (std::size_t i = 0; i < bd.size(); ++i) delta[i] = bd[i] - bc[i] - bc2[i];
    return pad(times(times(s, s2), affine(delta)), c + c2);
  }

  std::vector<long> generator_degrees(long up_to) {
    for (long d = 1; d < up_to; ++d) {
      const long rd = r(d);
      if (rd < 0) continue;
      if (rd + 1 > kMaxDim) throw Unsupported("instance too large for the brute-force oracle");
      EchelonBasis<F> span(field_, static_cast<std::size_t>(rd + 1));
      for (long c = 1; 2 * c <= d; ++c) {
        for (const auto& m1 : monomial_basis(D_, c)) {
          for (const auto& m2 : monomial_basis(D_, d - c)) {
            span.insert_dense(product(section(m1), c, section(m2), d - c));
          }
        }
      }
      auto candidates = monomial_basis(D_, d);
      std::sort(candidates.begin(), candidates.end(),
                [](const auto& a, const auto& b) { return a.c < b.c; });
      for (const auto& m : candidates) {
        if (span.insert_dense(section(m))) gens_.push_back({d, section(m)});
      }
    }
    std::vector<long> out;
    for (const auto& g : gens_) out.push_back(g.first);
    return out;
  }

  std::vector<long> relation_degrees(long up_to) {
    std::vector<long> out;
    std::map<long, std::vector<detail::ExpVec>> monomials;
    std::map<long, std::vector<Vec<F>>> kernels;
    for (long d = 1; d <= up_to; ++d) {
      auto& mons = monomials[d];
      detail::ExpVec cur(gens_.size(), 0);
      enumerate(d, 0, cur, mons);
      if (mons.empty()) continue;
      const long rd = r(d);
      if (rd + 1 > kMaxDim) throw Unsupported("instance too large for the brute-force oracle");
      const std::size_t rows = rd < 0 ? 0 : static_cast<std::size_t>(rd + 1);
      Matrix<F> m(field_, rows, mons.size());
      for (std::size_t j = 0; j < mons.size() && rows > 0; ++j) {
        const auto v = image(mons[j], d);
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[i];
      }
      if (rows > 0 && rank(m) != rows) throw InternalError("oracle generators do not span S_d");
      auto& ker = kernels[d];
      ker = rows > 0 ? kernel_basis(m) : identity_rows(mons.size());
      if (ker.empty()) continue;

      std::map<detail::ExpVec, std::size_t> index;
      for (std::size_t j = 0; j < mons.size(); ++j) index[mons[j]] = j;
      EchelonBasis<F> lower(field_, mons.size());
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        const long dp = d - gens_[k].first;
        auto it = kernels.find(dp);
        if (it == kernels.end()) continue;
        const auto& pm = monomials[dp];
        for (const auto& v : it->second) {
          SparseVec<F> w;
          std::vector<std::pair<std::uint32_t, typename F::value_type>> entries;
          for (std::size_t j = 0; j < v.size(); ++j) {
            if (field_.is_zero(v[j])) continue;
            auto mm = pm[j];
            ++mm[k];
            entries.emplace_back(static_cast<std::uint32_t>(index.at(mm)), v[j]);
          }
          std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          for (auto& [i, x] : entries) w.push(i, x);
          lower.insert(std::move(w));
        }
      }
      for (std::size_t c = lower.rank(); c < ker.size(); ++c) out.push_back(d);
    }
    return out;
  }

 private:
  void enumerate(long rest, std::size_t k, detail::ExpVec& cur, std::vector<detail::ExpVec>& out) const {
    if (k == gens_.size()) {
      if (rest == 0) {
        out.push_back(cur);
        if (out.size() > kMaxMonomials) throw Unsupported("too many monomials for the brute-force oracle");
      }
      return;
    }
    for (long a = 0; a * gens_[k].first <= rest; ++a) {
      cur[k] = a;
      enumerate(rest - a * gens_[k].first, k + 1, cur, out);
    }
    cur[k] = 0;
  }

  Poly image(const detail::ExpVec& x, long d) const {
    Poly acc{field_.one()};
    long deg = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (long a = 0; a < x[k]; ++a) {
        acc = deg == 0 ? gens_[k].second : product(acc, deg, gens_[k].second, gens_[k].first);
        deg += gens_[k].first;
      }
    }
    if (deg != d) throw InternalError("oracle monomial has the wrong degree");
    return acc;
  }

  std::vector<Vec<F>> identity_rows(std::size_t size) const {
    std::vector<Vec<F>> out(size, Vec<F>(size, field_.zero()));
    for (std::size_t i = 0; i < size; ++i) out[i][i] = field_.one();
    return out;
  }

  F field_;
  QDivisor D_ = QDivisor::from_alphas({Fraction(0)});
  std::vector<bool> finite_;
  std::vector<Poly> factor_;
  std::vector<std::pair<long, Poly>> gens_;
};

}  // namespace

OracleResult brute_force_oracle(const QDivisor& D, const FieldSpec& spec, std::optional<long> up_to) {
  const int sign = D.degree().sign();
  if (sign < 0) return {};
  if (sign == 0) return {{denominator_data(D).ell}, {}};
  return visit_field(spec, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    Oracle<F> oracle(field, D);
    const auto bounds = degree_bounds(D);
    OracleResult out;
    out.generator_degrees = oracle.generator_degrees(up_to.value_or(bounds.gen_bound));
    out.relation_degrees = oracle.relation_degrees(bounds.rel_bound);
    std::sort(out.generator_degrees.begin(), out.generator_degrees.end());
    return out;
  });
}

}  // namespace canring
