#pragma once

#include "branchlab/rootsys.hpp"
#include "branchlab/weight.hpp"

#include <vector>

namespace branchlab {

/// An element of a signed Weyl orbit: the weight w(x) with sign (-1)^length(w).
struct SignedWeight {
    Weight weight;
    int sign;  // +1 or -1
};

// w - 2 (w, alpha) / (alpha, alpha) * alpha. Throws DomainError for alpha = 0.
Weight reflect(const Weight& w, const Weight& alpha);

struct DominantForm {
    Weight dominant;
    int parity;    // (-1)^(reflections applied); 0 when the weight lies on a wall
    bool regular;  // false iff some reflection fixes the weight
};

DominantForm to_dominant(const Weight& w, const RootSystem& rs);

// Orbit of a strictly dominant weight under W, each element tagged with
// epsilon of the unique group element producing it. Breadth-first from w;
// order is deterministic. Throws DomainError if w lies on a wall.
std::vector<SignedWeight> signed_orbit(const Weight& w, const RootSystem& rs);

// Plain W-orbit of any weight (stabilizers allowed).
std::vector<Weight> orbit(const Weight& w, const RootSystem& rs);

} // namespace branchlab
