#pragma once

#include <functional>

#include "e2ab/abelian.hpp"

namespace e2ab {

/// A finite abelian group presented only through a multiplication oracle on
/// the label set {0, ..., n-1}.
struct FiniteAbelianOracle {
    size_t n = 0;
    size_t identity = 0;
    std::function<size_t(size_t, size_t)> op;
};

/// Structure from the order profile: for each k, the count of x with x^k = 1
/// determines a finite abelian group uniquely. Requires only element orders.
AbelianGroup abelian_structure_from_orders(const FiniteAbelianOracle &g);

/// Structure plus an explicit projection: coords[x] is the coordinate vector
/// of label x against the returned invariant factors. Built by basis
/// extraction; the structure is cross-checked against the order profile.
AbelianGroup abelian_structure_with_coords(const FiniteAbelianOracle &g,
                                           std::vector<std::vector<Int>> &coords);

}  // namespace e2ab
