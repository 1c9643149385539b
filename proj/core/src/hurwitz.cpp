#include "milnor/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

namespace milnor {

namespace {

// Orientation of a chord as seen from one of its endpoints: the other
// endpoint, measured counterclockwise from p. Punctures sit at the roots of
// unity, so the circular order of (q - p) mod (m+1) is the angular order of
// the directions q - p in the plane.
int direction_at(const segment_chord& c, int p, int m) {
    int other = (c.k == p) ? c.l : c.k;
    int d = (other - p) % (m + 1);
    if (d < 0) d += m + 1;
    return d;
}

// Keeps conjugator words from compounding across chains of moves: an arc
// isotopic to a straight segment is re-based onto it, and any other
// conjugator is replaced by a word read off its canonical form, whose length
// is bounded by the group element rather than by the move history. The key
// (and hence the arc) is unchanged.
arc tidy(const arc& a) {
    if (a.conjugator.letters.empty()) return a;
    if (auto c = match_segment(a)) return chord_arc(a.m, *c, a.hand);
    return make_arc(a.m, a.base, word_of(normal_form(a.conjugator)), a.hand);
}

}  // namespace

std::string key_of(const vanishing_tuple& T) {
    std::string out;
    for (const auto& a : T.arcs) {
        out += key_string(a.key);
        out += '/';
    }
    return out;
}

vanishing_tuple standard_tuple(int m, handedness hand) {
    if (m < 1) throw std::invalid_argument("standard_tuple: m must be >= 1");
    vanishing_tuple T;
    T.m = m;
    T.arcs.reserve(m);
    for (int j = 1; j <= m; ++j)
        T.arcs.push_back(chord_arc(m, segment_chord{j - 1, j}, hand));
    return T;
}

vanishing_tuple hurwitz_move(const vanishing_tuple& T, int i, int direction) {
    const int r = static_cast<int>(T.arcs.size());
    if (i < 1 || i >= r)
        throw std::invalid_argument("hurwitz_move: position out of range");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument(
            "hurwitz_move: direction must be +1 or -1");
    vanishing_tuple out = T;
    const arc& a = T.arcs[i - 1];
    const arc& b = T.arcs[i];
    if (direction == 1) {
        out.arcs[i - 1] = tidy(apply_braid(half_twist(a), b));
        out.arcs[i] = a;
    } else {
        out.arcs[i - 1] = b;
        out.arcs[i] = tidy(apply_braid(invert(half_twist(b)), a));
    }
    return out;
}

canonical_braid total_monodromy(const vanishing_tuple& T) {
    braid_word prod(T.m + 1, {});
    for (const auto& a : T.arcs) prod = multiply(prod, half_twist(a));
    return normal_form(prod);
}

std::vector<vanishing_tuple> orbit(const vanishing_tuple& T,
                                   std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("orbit: cap must be >= 1");
    vanishing_tuple start = T;
    for (auto& a : start.arcs) a = tidy(a);
    std::vector<vanishing_tuple> found;
    std::unordered_map<std::string, std::size_t> seen;
    std::deque<std::size_t> frontier;
    seen.emplace(key_of(start), 0);
    found.push_back(std::move(start));
    frontier.push_back(0);
    const int r = static_cast<int>(T.arcs.size());
    while (!frontier.empty()) {
        const vanishing_tuple cur = found[frontier.front()];
        frontier.pop_front();
        for (int i = 1; i < r; ++i) {
            for (int dir : {1, -1}) {
                vanishing_tuple next = hurwitz_move(cur, i, dir);
                std::string key = key_of(next);
                if (seen.contains(key)) continue;
                if (found.size() >= cap) throw orbit_cap_exceeded(cap);
                seen.emplace(std::move(key), found.size());
                frontier.push_back(found.size());
                found.push_back(std::move(next));
            }
        }
    }
    std::vector<std::pair<std::string, std::size_t>> order(seen.begin(),
                                                           seen.end());
    std::sort(order.begin(), order.end());
    std::vector<vanishing_tuple> out;
    out.reserve(found.size());
    for (const auto& [key, idx] : order) out.push_back(std::move(found[idx]));
    return out;
}

std::optional<tree_config> clockwise_tree_of(
    int m, const std::vector<segment_chord>& chords) {
    const int r = static_cast<int>(chords.size());
    for (const auto& c : chords)
        if (c.k < 0 || c.l <= c.k || c.l > m) return std::nullopt;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (chords[i] == chords[j]) return std::nullopt;
            if (relate_chords(chords[i], chords[j]) ==
                chord_relation::crossing)
                return std::nullopt;
        }
    }
    // Union must be acyclic and connected on the punctures it touches.
    std::vector<int> parent(m + 1);
    for (int v = 0; v <= m; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<bool> touched(m + 1, false);
    for (const auto& c : chords) {
        touched[c.k] = touched[c.l] = true;
        int a = find(c.k), b = find(c.l);
        if (a == b) return std::nullopt;
        parent[a] = b;
    }
    int vertices = 0;
    for (int v = 0; v <= m; ++v)
        if (touched[v]) ++vertices;
    if (r > 0 && vertices != r + 1) return std::nullopt;
    // At each shared puncture, later tuple positions must point strictly
    // clockwise of earlier ones.
    for (int p = 0; p <= m; ++p) {
        int prev = -1;
        for (const auto& c : chords) {
            if (c.k != p && c.l != p) continue;
            int dir = direction_at(c, p, m);
            if (prev >= 0 && dir >= prev) return std::nullopt;
            prev = dir;
        }
    }
    return tree_config{chords};
}

std::optional<tree_config> is_clockwise_tree(const vanishing_tuple& T) {
    std::vector<segment_chord> chords;
    chords.reserve(T.arcs.size());
    for (const auto& a : T.arcs) {
        auto c = match_segment(a);
        if (!c) return std::nullopt;
        chords.push_back(*c);
    }
    return clockwise_tree_of(T.m, chords);
}

}  // namespace milnor
