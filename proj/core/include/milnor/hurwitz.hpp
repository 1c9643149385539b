#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/arcs.hpp"

namespace milnor {

// Ordered tuple of vanishing arcs in the (m+1)-punctured disc. Every entry's
// half-twist is conjugate to a generator, which holds by construction for
// anything built from arcs.
struct vanishing_tuple {
    int m = 1;
    std::vector<arc> arcs;
};

// Concatenation of the entry keys; two tuples agree entrywise up to isotopy
// iff their keys are equal strings.
std::string key_of(const vanishing_tuple& T);

// The A_m chain (delta^{0,1}, ..., delta^{m-1,m}).
vanishing_tuple standard_tuple(int m, handedness hand = handedness::right);

// Elementary Hurwitz move at position i (1-based, i < length). With g_j the
// half-twist of entry j, direction +1 maps (g_i, g_{i+1}) to
// (g_i g_{i+1} g_i^{-1}, g_i) and direction -1 is its inverse. The ordered
// product g_1 ... g_r is preserved.
vanishing_tuple hurwitz_move(const vanishing_tuple& T, int i, int direction);

// Normal form of the ordered product of all half-twists; a Hurwitz-move
// invariant.
canonical_braid total_monodromy(const vanishing_tuple& T);

struct orbit_cap_exceeded : std::runtime_error {
    explicit orbit_cap_exceeded(std::size_t cap)
        : std::runtime_error("orbit size exceeds cap " + std::to_string(cap)) {
    }
};

// BFS closure of T under all elementary moves, deduplicated and sorted by
// key. Throws orbit_cap_exceeded as soon as more than `cap` distinct tuples
// are seen.
std::vector<vanishing_tuple> orbit(const vanishing_tuple& T, std::size_t cap);

// Chords of a tuple whose entries are all straight segments; list position =
// tuple position.
struct tree_config {
    std::vector<segment_chord> chords;
};

// Combinatorial core on plain chords: pairwise disjoint or sharing a single
// endpoint, union a tree on the punctures it touches, and at every shared
// puncture the incident segments in tuple order point in strictly clockwise
// order. Returns the configuration on success.
std::optional<tree_config> clockwise_tree_of(
    int m, const std::vector<segment_chord>& chords);

// Matches every arc to a chord (empty result if any entry is not a segment)
// and then applies clockwise_tree_of.
std::optional<tree_config> is_clockwise_tree(const vanishing_tuple& T);

}  // namespace milnor
