#pragma once

#include "gkz/ishida.hpp"

#include <random>

namespace gkz::testing {

// exhaustive search for u >= 0 with gens * u = alpha and every u_i <= bound
bool brute_force_span(const IntMatrix& gens, const ZVec& alpha, long bound);

// alpha in N(cols) - N(cols[sub]), both multiplicity-bounded
bool brute_force_minus_span(const IntMatrix& gens, const std::vector<int>& sub, const ZVec& alpha,
                            long bound);

// Degreewise cohomology of the stable Koszul complex on the variables off the
// face, applied to the localization along the face. Independent of the Ishida
// route; one 0/1 membership per subset of the off-face columns.
std::vector<int> cech_dims(const MembershipOracle& oracle, int face_id, const ZVec& alpha,
                           SearchBudget& budget);

// Hilbert basis of the saturation of a two-dimensional datum: lattice points of
// the closed parallelogram on the primitive extreme rays, reduced to the
// irreducible ones. Independent of the zonotope route used by is_normal.
std::vector<ZVec> hilbert_basis_2d(const GkzDatum& datum);

// random pointed datum with surjective column lattice, d <= dmax, n <= nmax
std::shared_ptr<GkzDatum> random_datum(std::mt19937& rng, int dmax, int nmax, int entry_bound);

ZVec random_degree(std::mt19937& rng, int dim, int bound);

} // namespace gkz::testing
