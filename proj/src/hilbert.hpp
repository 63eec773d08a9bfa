#pragma once

// Hilbert series numerators over a weighted polynomial ring k[x_1..x_N],
// deg x_k = w_k: HS(M) = N(t) / prod (1 - t^{w_k}).

#include <vector>

#include "canring/divisor.hpp"

namespace canring::detail {

using Poly = std::vector<long>;  // coefficient of t^i at index i

/// Numerator for k[x] / J, J generated by the given exponent vectors.
Poly monomial_quotient_numerator(std::vector<std::vector<long>> gens, const std::vector<long>& weights);

/// Numerator for S_D viewed as a module over k[x] via generators of the
/// given degrees. Requires deg D > 0.
Poly ring_numerator(const QDivisor& D, const std::vector<long>& weights);

}  // namespace canring::detail
