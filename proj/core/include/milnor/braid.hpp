#pragma once

#include <string>
#include <vector>

namespace milnor {

// Global handedness of the generator letters: sigma_i is the right- or
// left-handed half-twist along the chord between punctures i-1 and i.
// Flipping it must not change any classification verdict.
enum class handedness { right, left };

// p[i] = end slot of the strand starting at slot i (0-based slots).
// Composition convention: perm(u then v) = perm(v) o perm(u).
using perm = std::vector<int>;

// Word in the Artin generators of Br_{strands}. Letter +i is sigma_i,
// letter -i is its inverse, 1 <= i <= strands-1. Empty word = identity.
struct braid_word {
    int strands = 2;
    std::vector<int> letters;

    braid_word() = default;
    braid_word(int strands_, std::vector<int> letters_);
};

// Left-greedy (Garside) normal form Delta^delta_power f_1 ... f_k.
// Invariants: every adjacent pair is left-weighted, S(f_{j+1}) contained in
// F(f_j); no factor is the identity or the full half-twist permutation.
// Two words represent the same braid iff their canonical forms are equal.
struct canonical_braid {
    int strands = 2;
    int delta_power = 0;
    std::vector<perm> factors;

    bool operator==(const canonical_braid&) const = default;
    bool is_identity() const { return delta_power == 0 && factors.empty(); }
};

braid_word multiply(const braid_word& u, const braid_word& v);
braid_word invert(const braid_word& u);
// b g b^{-1}
braid_word conjugate(const braid_word& b, const braid_word& g);

canonical_braid normal_form(const braid_word& u);
bool equal(const braid_word& u, const braid_word& v);

// A word for the half-twist along the straight chord between punctures k and
// l, 0 <= k < l <= m, in Br_{m+1}. For l = k+1 this is the single letter
// sigma_{k+1}. The formula is validated by the disjoint-chord commutation and
// homology oracles before being trusted (see tests).
braid_word half_twist_word(int k, int l, int m,
                           handedness hand = handedness::right);

// Underlying permutation of the whole word (image in the symmetric group).
perm permutation_of(const braid_word& u);

// Some word representing the canonical form (round-trips through
// normal_form).
braid_word word_of(const canonical_braid& cb);

// Greedy prefix decomposition of a permutation-braid factor into letters.
std::vector<int> factor_letters(const perm& p);

// "identity", or delta power and factors joined by " | ", e.g. "D^-1 | 1 2".
std::string to_string(const canonical_braid& cb);

// Compact injective encoding, usable as an ordering/dedup key.
std::string key_string(const canonical_braid& cb);

}  // namespace milnor
