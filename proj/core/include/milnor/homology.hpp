#pragma once

#include <vector>

#include "milnor/arcs.hpp"
#include "milnor/braid.hpp"

namespace milnor {

using ivec = std::vector<long long>;
using imat = std::vector<ivec>;

// epsilon = V_i . V_{i+1} = (-1)^{n(n+1)/2 + 1} for odd n > 1. The
// handedness records which twist direction the positive letters denote; it
// flips the transvection sign and nothing else.
struct sign_convention {
    int n = 3;
    int epsilon = -1;
    handedness hand = handedness::right;
};

sign_convention make_convention(int n, handedness hand = handedness::right);

// Class of the final vanishing cycle in the basis [V_1..V_m], defined up to
// global sign; stored with the first nonzero entry positive.
struct homology_class {
    ivec a;
    bool operator==(const homology_class&) const = default;
};

homology_class make_class(ivec a);

// m x m matrix B with B_{i,i+1} = epsilon, B_{i+1,i} = -epsilon (n odd, so
// the middle-dimensional form is antisymmetric with zero diagonal).
imat intersection_matrix(int m, const sign_convention& conv);

// Transvection action of sigma_i^{sign} on x. Frozen sign choice: a positive
// right-handed letter acts by x -> x - epsilon (x . V_i) e_i, which makes the
// class of every chord arc a +interval vector.
homology_class generator_action(int i, int sign, const homology_class& x,
                                const sign_convention& conv);

// Matrix of the Picard-Lefschetz representation; group homomorphism, and
// every image matrix M preserves the pairing: M^T B M = B.
imat braid_rep(const braid_word& b, const sign_convention& conv);

// rep(conjugator) applied to the base chord's interval class, normalized.
// The chord delta^{k,l} itself maps to e_{k+1} + ... + e_l.
homology_class arc_class(const arc& a, const sign_convention& conv);

}  // namespace milnor
