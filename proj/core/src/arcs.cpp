#include "milnor/arcs.hpp"

#include <stdexcept>

namespace milnor {

segment_chord make_chord(int m, int k, int l) {
    if (m < 1) throw std::invalid_argument("make_chord: m < 1");
    const int n = m + 1;
    k = ((k % n) + n) % n;
    l = ((l % n) + n) % n;
    if (k == l) throw std::invalid_argument("make_chord: equal endpoints");
    segment_chord c;
    c.k = std::min(k, l);
    c.l = std::max(k, l);
    return c;
}

std::vector<segment_chord> all_chords(int m) {
    std::vector<segment_chord> cs;
    for (int k = 0; k < m + 1; ++k)
        for (int l = k + 1; l <= m; ++l) cs.push_back(segment_chord{k, l});
    return cs;
}

chord_relation relate_chords(const segment_chord& c1,
                             const segment_chord& c2) {
    if (c1.k == c2.k || c1.k == c2.l || c1.l == c2.k || c1.l == c2.l)
        return chord_relation::shared_endpoint;
    const bool k_inside = c1.k < c2.k && c2.k < c1.l;
    const bool l_inside = c1.k < c2.l && c2.l < c1.l;
    return k_inside != l_inside ? chord_relation::crossing
                                : chord_relation::disjoint;
}

arc make_arc(int m, const segment_chord& base, const braid_word& conjugator,
             handedness hand) {
    if (m < 1) throw std::invalid_argument("make_arc: m < 1");
    if (conjugator.strands != m + 1)
        throw std::invalid_argument("make_arc: conjugator strand mismatch");
    if (!(0 <= base.k && base.k < base.l && base.l <= m))
        throw std::invalid_argument("make_arc: invalid chord");
    arc a;
    a.m = m;
    a.base = base;
    a.conjugator = conjugator;
    a.hand = hand;
    a.key = normal_form(
        conjugate(conjugator, half_twist_word(base.k, base.l, m, hand)));
    return a;
}

arc chord_arc(int m, const segment_chord& c, handedness hand) {
    return make_arc(m, c, braid_word(m + 1, {}), hand);
}

braid_word half_twist(const arc& a) {
    return conjugate(a.conjugator,
                     half_twist_word(a.base.k, a.base.l, a.m, a.hand));
}

arc apply_braid(const braid_word& b, const arc& a) {
    if (b.strands != a.m + 1)
        throw std::invalid_argument("apply_braid: strand mismatch");
    return make_arc(a.m, a.base, multiply(b, a.conjugator), a.hand);
}

bool is_isotopic(const arc& a1, const arc& a2) {
    if (a1.m != a2.m) throw std::invalid_argument("is_isotopic: m mismatch");
    if (a1.hand != a2.hand)
        throw std::invalid_argument("is_isotopic: handedness mismatch");
    return a1.key == a2.key;
}

std::optional<segment_chord> match_segment(const arc& a) {
    for (const segment_chord& c : all_chords(a.m)) {
        if (normal_form(half_twist_word(c.k, c.l, a.m, a.hand)) == a.key)
            return c;
    }
    return std::nullopt;
}

}  // namespace milnor
