#pragma once

#include "gkz/matrix.hpp"

#include <optional>

namespace gkz {

// a . x >= b, strict when flagged
struct LinIneq {
    QVec a;
    Rat b;
    bool strict = false;
};

// Exact Fourier-Motzkin feasibility; returns a rational sample point when the
// system is feasible.
std::optional<QVec> fm_feasible(std::vector<LinIneq> system, int nvars);

// Integer functional h with h . c >= 1 for every column c, when one exists.
std::optional<ZVec> find_positive_functional(const IntMatrix& columns);

// Is v in the rational cone generated by the columns of G?
bool in_rational_cone(const IntMatrix& G, const QVec& v);

// Does some lambda in [0,1)^n satisfy  G lambda = v?  (half-open zonotope test)
bool in_half_open_zonotope(const IntMatrix& G, const ZVec& v);

} // namespace gkz
