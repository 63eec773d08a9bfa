#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <vector>

#include "canring/divisor.hpp"
#include "canring/fraction.hpp"

namespace canring {

/// The monomial u^d t_1^{c_1} ... t_n^{c_n} with sum c_i = 0.
struct GradedMonomial {
  long d = 0;
  std::vector<long> c;

  GradedMonomial& operator+=(const GradedMonomial& o);
  friend GradedMonomial operator+(GradedMonomial a, const GradedMonomial& b) { return a += b; }
  friend bool operator==(const GradedMonomial&, const GradedMonomial&) = default;
  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

/// True iff sum c_i = 0 and c_i >= -d alpha_i for all i.
bool in_cone(const QDivisor& D, const GradedMonomial& m);

/// All monomials of degree d satisfying the cone inequalities, sorted by c.
/// A one-point divisor is handled through its ghost point, so the c-vectors
/// then have length 2.
std::vector<GradedMonomial> monomial_spanning_set(const QDivisor& D, long d);

/// The spanning-set members with c_i = -floor(d alpha_i) for i >= 3, ordered
/// by increasing c_1. Its size is graded_dim(D, d).
std::vector<GradedMonomial> monomial_basis(const QDivisor& D, long d);

/// Rays, fundamental-cube points and the vector epsilon of the cone of D.
/// For a one-point divisor the model lives on the ghost-point divisor.
struct ConeModel {
  QDivisor divisor;
  std::vector<GradedMonomial> rays;
  std::vector<GradedMonomial> cube_points;
  std::vector<Fraction> epsilon;
  /// Inverse of the ray matrix in (d, c_1, ..., c_{n-1}) coordinates; row i
  /// of the ray matrix is e_i.
  std::vector<std::vector<Fraction>> ray_inverse;
};

inline constexpr long kMaxCubePoints = 2'000'000;

/// Throws Unsupported unless deg D > 0, or if there are more than
/// kMaxCubePoints cube points to list.
ConeModel build_cone_model(const QDivisor& D);

/// Number of fundamental-cube points, counted without listing them.
/// Throws Unsupported unless deg D > 0.
mpz_class cube_point_count(const QDivisor& D);

/// Rays followed by the cube points.
std::vector<GradedMonomial> semigroup_generators(const ConeModel& model);

/// (1/deg D, -alpha_1/deg D, ..., -alpha_n/deg D).
std::vector<Fraction> epsilon_vector(const ConeModel& model);

/// Coordinates a with m = sum a_i e_i.
std::vector<Fraction> barycentric_coordinates(const ConeModel& model, const GradedMonomial& m);

/// |det(e_1, ..., e_n)| in (d, c_1, ..., c_{n-1}) coordinates.
Fraction ray_determinant(const ConeModel& model);

/// m = cube point (or zero) + sum k_i e_i with k_i >= 0 integers.
struct ConeDecomposition {
  std::optional<std::size_t> cube_index;  // empty for the zero remainder
  std::vector<long> ray_multiples;
};

/// Decomposes a lattice point of the cone; nullopt if m is not in the cone or
/// the remainder is not a listed cube point.
std::optional<ConeDecomposition> decompose(const ConeModel& model, const GradedMonomial& m);

}  // namespace canring
