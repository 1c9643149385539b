#pragma once

#include <optional>
#include <string>

#include "milnor/arcs.hpp"
#include "milnor/homology.hpp"
#include "milnor/lattice.hpp"

namespace milnor {

enum class symplectic_kind { standard_cotangent, exotic_structure };

// Verdict for the total space built from the A_m chain plus one final arc:
// standard T*S^{n+1} exactly when the arc is isotopic to a straight segment,
// in which case the segment is reported.
struct classification_report {
    int m = 2;
    int n = 2;
    arc input;
    std::string half_twist_nf;
    std::optional<segment_chord> matched_segment;
    symplectic_kind symplectic = symplectic_kind::exotic_structure;
    // n odd only: the middle-homology class of the final sphere and its
    // self-intersection number.
    std::optional<homology_class> h_class;
    std::optional<long long> self_int;
    diffeo_result diffeo;
};

// m >= 2, n >= 2; the arc must live in the (m+1)-punctured disc.
classification_report classify(int m, int n, const arc& a);

// m(m+1)/2, the number of straight segments and of standard outcomes.
long long standard_count(int m);

}  // namespace milnor
