#pragma once

#include <utility>
#include <vector>

#include "ratcycle/census.hpp"

namespace ratcycle {

// Least-squares fit of A = c1 + (total - c1) * exp(-c2 * N) to (N, A)
// points.  Coarse grid over c1 in [0, total], c2 in [0, 1], then iterative
// local refinement to relative tolerance 1e-6.  Deterministic.  Throws if
// fewer than 3 points or all depths coincide.
std::pair<double, double> fit_exponential(
    const std::vector<std::pair<double, double>>& points, double total);

std::pair<double, double> fit_exponential(const std::vector<ATablePoint>& points,
                                          double total);

}  // namespace ratcycle
