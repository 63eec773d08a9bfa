#pragma once

// Degreewise engine for S_D over a concrete field. Sections of S_d are binary
// forms of degree r = deg floor(dD) in (T, W), stored as coefficient vectors
// with index k <-> T^k W^(r-k); a monomial u^d prod t_i^{c_i} is the form
// prod t_i^{c_i + floor(d alpha_i)}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "canring/conelattice.hpp"
#include "canring/divisor.hpp"
#include "canring/errors.hpp"
#include "canring/exactla.hpp"
#include "canring/field.hpp"

namespace canring::detail {

using ExpVec = std::vector<long>;

template <ExactField F>
Fraction to_fraction(const F&, const typename F::value_type& v) {
  if constexpr (F::fraction_free) {
    return Fraction(v);
  } else {
    return Fraction(static_cast<long>(v));
  }
}

template <ExactField F>
bool same_point(const F& field, const LinearForm<F>& a, const LinearForm<F>& b) {
  return field.is_zero(field.sub(field.mul(a.t_coeff, b.w_coeff), field.mul(a.w_coeff, b.t_coeff)));
}

/// D realized over a field: one-point divisors get a ghost point that is
/// distinct from the given point in this field.
template <ExactField F>
std::pair<QDivisor, std::vector<LinearForm<F>>> realize(const F& field, const QDivisor& D) {
  std::vector<LinearForm<F>> forms;
  for (const auto& p : D.points()) forms.push_back(point_form(field, p));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      if (same_point(field, forms[i], forms[j])) {
        throw PointCollision("points " + D.points()[i].str() + " and " + D.points()[j].str() + " coincide over " +
                             field.spec().str());
      }
    }
  }
  if (D.size() != 1) return {D, forms};
  PointP1 ghost = PointP1::infinity();
  for (long v = 0;; ++v) {
    auto g = point_form(field, ghost);
    if (!same_point(field, g, forms[0])) {
      forms.push_back(g);
      break;
    }
    ghost = PointP1::rational(Fraction(v));
  }
  return {QDivisor({D.points()[0], ghost}, {D.alpha(0), Fraction(0)}), forms};
}

template <ExactField F>
class Engine {
 public:
  using T = typename F::value_type;
  using Form = Vec<F>;

  struct Gen {
    long degree = 0;
    std::vector<long> c;
    Form form;
    std::size_t marked = 0;
    long order = 0;
  };

  struct Relation {
    long degree = 0;
    std::map<ExpVec, T, std::greater<>> terms;
  };

  Engine(F field, const QDivisor& D) : field_(std::move(field)), divisor_(D), forms_() {
    auto [aug, forms] = realize(field_, D);
    divisor_ = std::move(aug);
    forms_ = std::move(forms);
    if (divisor_.size() > 64) throw Unsupported("at most 64 points are supported");
    powers_.resize(forms_.size());
  }

  const F& field() const { return field_; }
  const QDivisor& divisor() const { return divisor_; }
  std::size_t n() const { return divisor_.size(); }

  const std::vector<long>& b(long d) {
    auto it = floors_.find(d);
    if (it == floors_.end()) it = floors_.emplace(d, floor_divisor(divisor_, d)).first;
    return it->second;
  }
  long r(long d) {
    if (d < 0) return -1;
    const auto& bd = b(d);
    return std::accumulate(bd.begin(), bd.end(), 0L);
  }

  Form mul(const Form& a, const Form& c) const {
    if (a.empty() || c.empty()) return {};
    Form out(a.size() + c.size() - 1, field_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (field_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (!field_.is_zero(c[j])) out[i + j] = field_.add(out[i + j], field_.mul(a[i], c[j]));
      }
    }
    return out;
  }

  const Form& power(std::size_t i, long e) {
    auto& pw = powers_[i];
    if (pw.empty()) pw.push_back(Form{field_.one()});
    const Form lin{forms_[i].w_coeff, forms_[i].t_coeff};
    while (static_cast<long>(pw.size()) <= e) pw.push_back(mul(pw.back(), lin));
    return pw[static_cast<std::size_t>(e)];
  }

  /// prod t_i^{e_i}.
  Form monomial_form(const std::vector<long>& e) {
    Form out{field_.one()};
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw InputError("monomial outside the cone");
      if (e[i] > 0) out = mul(out, power(i, e[i]));
    }
    return out;
  }

  /// Section of the degree-d monomial with exponent vector c.
  Form section(long d, const std::vector<long>& c) {
    if (c.size() != n()) throw InputError("monomial has the wrong number of coordinates");
    if (std::accumulate(c.begin(), c.end(), 0L) != 0) throw InputError("monomial coordinates must sum to zero");
    const auto& bd = b(d);
    std::vector<long> e(n());
    for (std::size_t i = 0; i < n(); ++i) e[i] = c[i] + bd[i];
    return monomial_form(e);
  }

  /// The form by which g_k multiplies S_{d - deg g_k} into S_d.
  Form multiplier(std::size_t k, long d) {
    const auto& g = gens_[k];
    const auto bd = b(d);
    const auto be = b(g.degree);
    const auto br = b(d - g.degree);
    std::vector<long> delta(n());
    for (std::size_t i = 0; i < n(); ++i) delta[i] = bd[i] - be[i] - br[i];
    return mul(g.form, monomial_form(delta));
  }

  // ---------------------------------------------------------------- generators

  std::vector<Gen> select_generators(long up_to) {
    std::vector<Gen> out;
    for (long d = 1; d < up_to; ++d) {
      const long rd = r(d);
      if (rd < 0) continue;
      const auto& bd = b(d);
      std::set<std::uint64_t> family;
      bool all_pregenerated = false;
      for (long c = 1; 2 * c <= d && !all_pregenerated; ++c) {
        if (r(c) < 0 || r(d - c) < 0) continue;
        const auto& b1 = b(c);
        const auto& b2 = b(d - c);
        std::uint64_t A = 0;
        for (std::size_t i = 0; i < n(); ++i) {
          if (bd[i] - b1[i] - b2[i] == 1) A |= std::uint64_t{1} << i;
        }
        if (A == 0) all_pregenerated = true;
        family.insert(A);
      }
      if (all_pregenerated) continue;

      EchelonBasis<F> span(field_, static_cast<std::size_t>(rd + 1));
      std::vector<std::uint64_t> fam;
      for (auto A : prune_supersets({family.begin(), family.end()})) {
        const long size = std::popcount(A);
        if (size > rd) continue;
        fam.push_back(A);
        std::vector<long> e(n(), 0);
        for (std::size_t i = 0; i < n(); ++i) e[i] = (A >> i) & 1;
        const Form base = monomial_form(e);
        for (long a = 0; a <= rd - size && !span.full(); ++a) {
          span.insert(SparseVec<F>::from_dense(field_, base, static_cast<std::uint32_t>(a)));
        }
      }
      if (span.full()) continue;

      const std::size_t j = marked_point(minimize_family(fam, rd), rd);
      const std::size_t k = j == 0 ? 1 : 0;
      for (long m = rd; m >= 0 && !span.full(); --m) {
        std::vector<long> e(n(), 0);
        e[j] = m;
        e[k] = rd - m;
        Form f = monomial_form(e);
        if (!span.insert(SparseVec<F>::from_dense(field_, f))) continue;
        Gen g;
        g.degree = d;
        g.c.resize(n());
        for (std::size_t i = 0; i < n(); ++i) g.c[i] = e[i] - bd[i];
        g.form = std::move(f);
        g.marked = j;
        g.order = m;
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  void set_generators(std::vector<Gen> gens) {
    gens_ = std::move(gens);
    max_gen_degree_ = 0;
    for (const auto& g : gens_) {
      if (g.degree <= 0) throw InputError("generators must have positive degree");
      max_gen_degree_ = std::max(max_gen_degree_, g.degree);
    }
    graded_.clear();
    DegreeData unit;
    unit.standard = {ExpVec(gens_.size(), 0)};
    unit.images = {Form{field_.one()}};
    unit.standard_set = {ExpVec(gens_.size(), 0)};
    graded_.emplace(0, std::move(unit));
    done_through_ = 0;
  }
  const std::vector<Gen>& generators() const { return gens_; }

  // ---------------------------------------------------- degreewise pipeline

  /// Runs degrees 1..through: standard monomials and initial-ideal generators
  /// always, minimal relations for degrees <= relations_through.
  void run(long through, long relations_through) {
    for (long d = done_through_ + 1; d <= through; ++d) {
      macaulay(d);
      if (d <= relations_through) koszul(d);
      done_through_ = d;
      graded_.erase(graded_.begin(), graded_.lower_bound(d + 1 - max_gen_degree_));
    }
  }

  long done_through() const { return done_through_; }
  const std::vector<std::pair<long, ExpVec>>& leading_terms() const { return leading_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  struct DegreeData {
    std::vector<ExpVec> standard;
    std::vector<Form> images;
    std::set<ExpVec> standard_set;
    std::optional<Matrix<F>> lift;  // inverse of the image matrix
  };

  static std::vector<std::uint64_t> prune_supersets(std::vector<std::uint64_t> fam) {
    std::vector<std::uint64_t> out;
    for (auto A : fam) {
      bool redundant = false;
      for (auto B : fam) {
        if (B != A && (B & A) == B) redundant = true;
      }
      if (!redundant) out.push_back(A);
    }
    return out;
  }

  // Merge A, B into A & B while |A u B| <= r + 1 (then V_A + V_B = V_{A n B}).
  static std::vector<std::uint64_t> minimize_family(std::vector<std::uint64_t> fam, long r) {
    for (bool changed = true; changed;) {
      changed = false;
      fam = prune_supersets(fam);
      for (std::size_t x = 0; x < fam.size() && !changed; ++x) {
        for (std::size_t y = x + 1; y < fam.size() && !changed; ++y) {
          if (std::popcount(fam[x] | fam[y]) <= r + 1) {
            const auto meet = fam[x] & fam[y];
            fam.erase(fam.begin() + static_cast<std::ptrdiff_t>(y));
            fam[x] = meet;
            changed = true;
          }
        }
      }
    }
    std::sort(fam.begin(), fam.end());
    return fam;
  }

  static std::size_t lowest(std::uint64_t A) { return static_cast<std::size_t>(std::countr_zero(A)); }

  static std::size_t marked_point(const std::vector<std::uint64_t>& fam, long r) {
    if (fam.empty()) return 0;
    if (fam.size() == 1) return fam[0] == 0 ? 0 : lowest(fam[0]);
    if (fam.size() == 2) {
      auto A = fam[0], B = fam[1];
      if (std::popcount(A) == r && std::popcount(B) != r) std::swap(A, B);
      if ((A & ~B) != 0) return lowest(A & ~B);
    }
    return fam[0] == 0 ? 0 : lowest(fam[0]);
  }

  Form image(long d, const ExpVec& x) {
    std::vector<long> c(n(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
      for (std::size_t i = 0; i < n(); ++i) c[i] += x[k] * gens_[k].c[i];
    }
    return section(d, c);
  }

  void macaulay(long d) {
    const long rd = r(d);
    std::set<ExpVec, std::greater<>> candidates;
    std::vector<std::pair<std::size_t, const DegreeData*>> sources;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const long dp = d - gens_[k].degree;
      if (dp < 0) continue;
      auto it = graded_.find(dp);
      if (it == graded_.end()) continue;
      for (const auto& mu : it->second.standard) {
        ExpVec m = mu;
        ++m[k];
        candidates.insert(std::move(m));
      }
    }
    DegreeData data;
    const std::size_t dim = rd < 0 ? 0 : static_cast<std::size_t>(rd + 1);
    EchelonBasis<F> span(field_, dim);
    for (const auto& m : candidates) {
      if (!span.full()) {
        Form f = image(d, m);
        if (span.insert(SparseVec<F>::from_dense(field_, f))) {
          data.standard.push_back(m);
          data.images.push_back(std::move(f));
          data.standard_set.insert(m);
          continue;
        }
      }
      if (is_minimal_leading(d, m)) leading_.emplace_back(d, m);
    }
    if (data.standard.size() != dim) {
      throw IncompleteGenerators("generators span only " + std::to_string(data.standard.size()) + " of the " +
                                 std::to_string(dim) + " dimensions of S_" + std::to_string(d));
    }
    graded_[d] = std::move(data);
  }

  bool is_minimal_leading(long d, const ExpVec& m) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      auto it = graded_.find(d - gens_[k].degree);
      if (it == graded_.end()) return false;
      ExpVec q = m;
      --q[k];
      if (!it->second.standard_set.count(q)) return false;
    }
    return true;
  }

  const Matrix<F>& lift_matrix(DegreeData& data) {
    if (!data.lift) {
      const std::size_t dim = data.images.size();
      Matrix<F> a(field_, dim, dim);
      for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) a(row, col) = data.images[col][row];
      }
      auto inv = inverse(a);
      if (!inv) throw InternalError("standard monomial images are dependent");
      data.lift = std::move(*inv);
    }
    return *data.lift;
  }

  // Minimal relations in degree d as H_1 of the Koszul complex of the
  // generators on S: cycles of  (+) S_{d - e_k} -> S_d  modulo boundaries.
  void koszul(long d) {
    struct Block {
      std::size_t gen;
      long degree;
      std::size_t dim;
      std::size_t offset;
    };
    std::vector<Block> blocks;
    std::vector<long> block_of(gens_.size(), -1);
    std::size_t K = 0;
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const long dp = d - gens_[k].degree;
      if (dp < 0 || r(dp) < 0) continue;
      block_of[k] = static_cast<long>(blocks.size());
      blocks.push_back({k, dp, static_cast<std::size_t>(r(dp) + 1), K});
      K += blocks.back().dim;
    }
    const long rd = r(d);
    const std::size_t rows = rd < 0 ? 0 : static_cast<std::size_t>(rd + 1);
    // the Macaulay step already checked that delta_1 is onto S_d
    if (K <= rows) return;
    const std::size_t cycles = K - rows;

    EchelonBasis<F> boundaries(field_, K);
    for (std::size_t p = 0; p < blocks.size() && boundaries.rank() < cycles; ++p) {
      for (std::size_t q = p + 1; q < blocks.size() && boundaries.rank() < cycles; ++q) {
        const auto& bi = blocks[p];
        const auto& bj = blocks[q];
        const long dpp = d - gens_[bi.gen].degree - gens_[bj.gen].degree;
        if (dpp < 0 || r(dpp) < 0) continue;
        const Form ni = multiplier(bj.gen, bi.degree);
        const Form nj = multiplier(bi.gen, bj.degree);
        for (long a = 0; a <= r(dpp) && boundaries.rank() < cycles; ++a) {
          SparseVec<F> v;
          for (std::size_t t = 0; t < ni.size(); ++t) {
            if (!field_.is_zero(ni[t])) v.push(static_cast<std::uint32_t>(bi.offset + a + t), ni[t]);
          }
          for (std::size_t t = 0; t < nj.size(); ++t) {
            if (!field_.is_zero(nj[t])) v.push(static_cast<std::uint32_t>(bj.offset + a + t), field_.neg(nj[t]));
          }
          boundaries.insert(std::move(v));
        }
      }
    }
    if (boundaries.rank() >= cycles) return;
    const std::size_t count = cycles - boundaries.rank();

    Matrix<F> delta(field_, rows, K);
    for (const auto& blk : blocks) {
      const Form mk = multiplier(blk.gen, d);
      for (std::size_t a = 0; a < blk.dim; ++a) {
        for (std::size_t t = 0; t < mk.size(); ++t) delta(a + t, blk.offset + a) = mk[t];
      }
    }
    std::size_t found = 0;
    for (const auto& z : kernel_basis(delta)) {
      if (found == count) break;
      if (!boundaries.insert_dense(z)) continue;
      ++found;
      relations_.push_back(lift_cycle(d, blocks, z));
    }
    if (found != count) throw InternalError("Koszul cycles do not account for the homology");
  }

  template <class Blocks>
  Relation lift_cycle(long d, const Blocks& blocks, const Vec<F>& z) {
    Relation rel;
    rel.degree = d;
    for (const auto& blk : blocks) {
      Vec<F> s(z.begin() + static_cast<std::ptrdiff_t>(blk.offset),
               z.begin() + static_cast<std::ptrdiff_t>(blk.offset + blk.dim));
      if (std::all_of(s.begin(), s.end(), [&](const T& x) { return field_.is_zero(x); })) continue;
      auto& data = graded_.at(blk.degree);
      const auto& inv = lift_matrix(data);
      for (std::size_t l = 0; l < blk.dim; ++l) {
        T coeff = field_.zero();
        for (std::size_t t = 0; t < blk.dim; ++t) coeff = field_.add(coeff, field_.mul(inv(l, t), s[t]));
        if (field_.is_zero(coeff)) continue;
        ExpVec m = data.standard[l];
        ++m[blk.gen];
        auto [it, fresh] = rel.terms.emplace(m, coeff);
        if (!fresh) it->second = field_.add(it->second, coeff);
      }
    }
    std::erase_if(rel.terms, [&](const auto& kv) { return field_.is_zero(kv.second); });
    if (rel.terms.empty()) throw InternalError("lifted relation is zero");
    normalize(rel);
    return rel;
  }

  void normalize(Relation& rel) const {
    if constexpr (F::fraction_free) {
      mpz_class den = 1, content = 0;
      for (const auto& [m, v] : rel.terms) den = lcm(den, mpz_class(v.get_den()));
      for (auto& [m, v] : rel.terms) {
        v *= den;
        content = gcd(content, mpz_class(v.get_num()));
      }
      if (sgn(rel.terms.begin()->second) < 0) content = -content;
      for (auto& [m, v] : rel.terms) v /= content;
    } else {
      const T s = field_.inv(rel.terms.begin()->second);
      for (auto& [m, v] : rel.terms) v = field_.mul(v, s);
    }
  }

  F field_;
  QDivisor divisor_;
  std::vector<LinearForm<F>> forms_;
  std::vector<std::vector<Form>> powers_;
  std::unordered_map<long, std::vector<long>> floors_;
  std::vector<Gen> gens_;
  long max_gen_degree_ = 0;
  std::map<long, DegreeData> graded_;
  long done_through_ = 0;
  std::vector<std::pair<long, ExpVec>> leading_;
  std::vector<Relation> relations_;
};

}  // namespace canring::detail
