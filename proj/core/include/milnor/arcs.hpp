#pragma once

#include <optional>
#include <vector>

#include "milnor/braid.hpp"

namespace milnor {

// Straight chord between punctures k and l on the unit circle, stored
// normalized with 0 <= k < l <= m. There are exactly m(m+1)/2 chords.
struct segment_chord {
    int k = 0;
    int l = 1;
    bool operator==(const segment_chord&) const = default;
    bool operator<(const segment_chord& o) const {
        return k != o.k ? k < o.k : l < o.l;
    }
};

// Normalizes arbitrary integer labels mod m+1 and orders the endpoints.
segment_chord make_chord(int m, int k, int l);

std::vector<segment_chord> all_chords(int m);

enum class chord_relation { disjoint, shared_endpoint, crossing };

// Crossing iff the endpoint pairs interleave on the circle.
chord_relation relate_chords(const segment_chord& c1, const segment_chord& c2);

// Isotopy class of an embedded path between two punctures, represented by the
// braid element of its half-twist: key = NF(conjugator * t_base *
// conjugator^{-1}). Two arcs are isotopic iff their keys are equal.
struct arc {
    int m = 1;
    segment_chord base;
    braid_word conjugator;
    handedness hand = handedness::right;
    canonical_braid key;
};

arc make_arc(int m, const segment_chord& base, const braid_word& conjugator,
             handedness hand = handedness::right);

// Convenience: the chord arc with identity conjugator.
arc chord_arc(int m, const segment_chord& c,
              handedness hand = handedness::right);

// A word representing the key element.
braid_word half_twist(const arc& a);

// Key of the result is NF(b * key(a) * b^{-1}); a group action on arcs.
arc apply_braid(const braid_word& b, const arc& a);

bool is_isotopic(const arc& a1, const arc& a2);

// The unique chord whose half-twist equals key(a), if any.
std::optional<segment_chord> match_segment(const arc& a);

}  // namespace milnor
