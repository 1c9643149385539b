#pragma once

#include <optional>
#include <utility>

#include "milnor/homology.hpp"

namespace milnor {

// H_{n+1}(E, M) with the thimble basis Delta_1 .. Delta_{m+1} and the
// linking pairing. sigma = (-1)^{(n+1)(n+2)/2}. final_class holds the
// coefficients of [V_{m+1}] when the pairing of Delta_{m+1} is needed.
struct thimble_lattice {
    int m = 1;
    int n = 3;
    int sigma = 1;
    imat pairing;  // V_i . V_j for i, j <= m
    std::optional<homology_class> final_class;
};

// x = [Delta_{m+1}] - sum a_i [Delta_i].
struct generator_class {
    homology_class a;
};

thimble_lattice make_lattice(int m, int n,
                             std::optional<homology_class> final_class = {},
                             handedness hand = handedness::right);

// Delta_i o Delta_j: sigma on the diagonal, (-1)^{n+1} V_i . V_j above it,
// zero below. Indices 1-based up to m+1; m+1 needs final_class.
long long linking_pairing(const thimble_lattice& L, int i, int j);

// x . x = sigma (1 - sum a_i a_{i-1} + sum a_i^2), boundary a_0 = a_{m+1} = 0.
long long self_intersection(const thimble_lattice& L, const generator_class& x);

// 2 sum a_i^2 - 2 sum a_i a_{i+1}: the positive definite A_m form; value 2
// exactly on the +-interval vectors.
long long am_quadratic(const homology_class& a);

// (k, l) with a = +-(e_{k+1} + ... + e_l), if a is an interval vector.
std::optional<std::pair<int, int>> is_interval_vector(const homology_class& a);

enum class diffeo_kind { standard_cotangent, distinguished_by_pairing };

struct diffeo_result {
    diffeo_kind kind = diffeo_kind::standard_cotangent;
    // Present exactly when distinguished: the pairing number x . x != 2 sigma.
    std::optional<long long> self_int;
    bool operator==(const diffeo_result&) const = default;
};

// n even: standard for every class. n odd: standard iff the class is an
// interval vector. Requires n >= 2; a must be present iff n is odd.
diffeo_result diffeo_type(int n, const std::optional<homology_class>& a);

}  // namespace milnor
