#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "milnor/gf2.hpp"

namespace milnor {

// Representation of the linear A_m quiver 1 -> 2 -> ... -> m over GF(2):
// spaces W_i of dimension dims[i-1] and maps rho_i : W_i -> W_{i+1} stored as
// maps[i-1] with shape dims[i] x dims[i-1].
struct quiver_rep {
    int m = 1;
    std::vector<int> dims;
    std::vector<gf2::matrix> maps;
    bool operator==(const quiver_rep&) const = default;
};

quiver_rep make_rep(int m, std::vector<int> dims,
                    std::vector<gf2::matrix> maps);

// Indecomposable supported on vertices k+1 .. l (one-dimensional at each,
// identity maps inside, zero outside), carried in grading `shift`.
struct interval_module {
    int k = 0;
    int l = 1;
    int shift = 0;
    bool operator==(const interval_module&) const = default;
    bool operator<(const interval_module& o) const {
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        return shift < o.shift;
    }
};

struct bar {
    interval_module iv;
    int mult = 0;
    bool operator==(const bar&) const = default;
};

// Sorted by (k, l, shift), multiplicities positive.
using barcode = std::vector<bar>;

// One-sided twisted complex over the A_m arrow category: summands are copies
// of the generators V_i placed in integer grades, the differential has
// entries labeled e_i (identity, degree 0) or f_i (arrow i -> i+1, degree 1),
// with the label forced by the (vertex, grade) pattern:
//   e-entry: same vertex, grade g -> g + 1;
//   f-entry: vertex i -> i + 1, grade g -> g.
// d[t][s] is the scalar of the component from summand s to summand t.
struct tw_summand {
    int vertex = 1;
    int grade = 0;
    bool operator==(const tw_summand&) const = default;
};

struct twisted_complex {
    int m = 1;
    std::vector<tw_summand> summands;
    std::vector<std::vector<std::uint8_t>> d;
    bool operator==(const twisted_complex&) const = default;
};

twisted_complex make_complex(int m, std::vector<tw_summand> summands,
                             std::vector<std::vector<std::uint8_t>> d);

// The interval complex C^{k,l} in grade `shift`.
twisted_complex interval_complex(int m, const interval_module& iv);

struct validation_result {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks entry patterns and d^2 = 0 under the composition table
// (e e = e, e f = f e = f, f f = 0).
validation_result validate(const twisted_complex& C);

// Gaussian elimination of e-entries; the result has f-entries only and is
// isomorphic to C in the homotopy category. Idempotent.
twisted_complex reduce(twisted_complex C);

// Degree-0 closed morphism X -> Y. Component patterns:
//   e-component: same vertex, same grade; f-component: vertex +1, grade -1...
// see morphism_label in the implementation. comp[t][s]: X summand s to Y
// summand t.
struct tw_morphism {
    twisted_complex source;
    twisted_complex target;
    std::vector<std::vector<std::uint8_t>> comp;
};

validation_result validate_morphism(const tw_morphism& f);

// Cone(f) = X[1] (+) Y with the block differential [d_X 0; f d_Y].
twisted_complex cone(const tw_morphism& f);

// A reduced complex splits by grade into plain quiver representations.
std::vector<std::pair<int, quiver_rep>> split_by_degree(
    const twisted_complex& C);

// Interval multiplicities from composite ranks by inclusion-exclusion.
// Bars carry shift 0.
barcode decompose(const quiver_rep& R);

// reduce + split_by_degree + decompose with grades recorded as shifts.
barcode graded_barcode(const twisted_complex& C);

// T_{V_{k+1}} ... T_{V_{l-1}} (V_l), built by iterated cones over the
// one-dimensional hom spaces; decomposes to the single interval (k, l).
twisted_complex iterated_twist(int m, int k, int l);

// True iff the interval (target.k, target.l) appears with some shift in the
// graded barcode of C (target.shift is ignored).
bool summand_test(const twisted_complex& C, const interval_module& target);

}  // namespace milnor
