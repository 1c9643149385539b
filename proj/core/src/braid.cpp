#include "milnor/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace milnor {

namespace {

perm identity_perm(int n) {
    perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

// Half-twist permutation: full reversal.
perm delta_perm(int n) {
    perm p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

// a o b: apply b first, then a.
perm compose(const perm& a, const perm& b) {
    perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

perm inverse(const perm& p) {
    perm r(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) r[p[i]] = i;
    return r;
}

// Generator t swaps 0-based slots t-1 and t.
perm transposition(int n, int t) {
    perm p = identity_perm(n);
    std::swap(p[t - 1], p[t]);
    return p;
}

// Starting set: generators that are prefixes of the factor.
// t in S(p) iff the strands starting at slots t-1, t cross.
bool in_starting_set(const perm& p, int t) { return p[t - 1] > p[t]; }

// Finishing set: generators that are suffixes of the factor.
bool in_finishing_set(const perm& inv_p, int t) {
    return inv_p[t - 1] > inv_p[t];
}

// tau(f) = Delta f Delta^{-1}; on permutations: rho o f o rho.
perm tau(const perm& p) {
    const int n = static_cast<int>(p.size());
    perm r(n);
    for (int i = 0; i < n; ++i) r[n - 1 - i] = n - 1 - p[i];
    return r;
}

void check_strands(const braid_word& u, const braid_word& v) {
    if (u.strands != v.strands)
        throw std::invalid_argument("braid words have different strand counts");
}

// Makes the pair (f, g) left-weighted by moving prefix letters of g into f.
// Returns true if anything moved. Preserves the product f*g.
bool left_weight_pair(perm& f, perm& g, int n) {
    bool moved = false;
    for (;;) {
        perm inv_f = inverse(f);
        int t = 0;
        for (int c = 1; c < n; ++c) {
            if (in_starting_set(g, c) && !in_finishing_set(inv_f, c)) {
                t = c;
                break;
            }
        }
        if (t == 0) return moved;
        const perm s = transposition(n, t);
        f = compose(s, f);
        g = compose(g, s);
        moved = true;
    }
}

}  // namespace

braid_word::braid_word(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
    if (strands < 2) throw std::invalid_argument("braid needs >= 2 strands");
    for (int x : letters) {
        if (x == 0 || std::abs(x) > strands - 1)
            throw std::invalid_argument("braid letter out of range");
    }
}

braid_word multiply(const braid_word& u, const braid_word& v) {
    check_strands(u, v);
    braid_word r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

braid_word invert(const braid_word& u) {
    braid_word r;
    r.strands = u.strands;
    r.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

braid_word conjugate(const braid_word& b, const braid_word& g) {
    return multiply(multiply(b, g), invert(b));
}

canonical_braid normal_form(const braid_word& u) {
    const int n = u.strands;
    canonical_braid cb;
    cb.strands = n;
    std::vector<perm>& fs = cb.factors;

    for (int letter : u.letters) {
        const int t = std::abs(letter);
        if (letter > 0) {
            fs.push_back(transposition(n, t));
        } else {
            // x sigma_t^{-1} = Delta^{-1} tau(x) y with y = s_t o rho.
            cb.delta_power -= 1;
            for (perm& f : fs) f = tau(f);
            fs.push_back(compose(transposition(n, t), delta_perm(n)));
        }
    }

    // Left-weighting sweeps. Terminates: every move shifts crossings toward
    // earlier factors and the total crossing count is fixed.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j + 1 < fs.size();) {
            if (left_weight_pair(fs[j], fs[j + 1], n)) changed = true;
            if (is_identity(fs[j + 1])) {
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            } else {
                ++j;
            }
        }
        while (!fs.empty() && is_identity(fs.back())) fs.pop_back();
    }

    const perm delta = delta_perm(n);
    while (!fs.empty() && fs.front() == delta) {
        cb.delta_power += 1;
        fs.erase(fs.begin());
    }
    return cb;
}

bool equal(const braid_word& u, const braid_word& v) {
    check_strands(u, v);
    return normal_form(u) == normal_form(v);
}

braid_word half_twist_word(int k, int l, int m, handedness hand) {
    if (m < 1) throw std::invalid_argument("half_twist_word: m < 1");
    if (k == l) throw std::invalid_argument("half_twist_word: k = l");
    if (k < 0 || l < 0 || k > m || l > m || k > l)
        throw std::invalid_argument("half_twist_word: indices out of range");
    std::vector<int> w;
    if (hand == handedness::right) {
        for (int i = k + 1; i <= l; ++i) w.push_back(i);
        for (int i = l - 1; i >= k + 1; --i) w.push_back(-i);
    } else {
        for (int i = k + 1; i <= l - 1; ++i) w.push_back(-i);
        w.push_back(l);
        for (int i = l - 1; i >= k + 1; --i) w.push_back(i);
    }
    return braid_word(m + 1, std::move(w));
}

perm permutation_of(const braid_word& u) {
    perm p = identity_perm(u.strands);
    for (int letter : u.letters)
        p = compose(transposition(u.strands, std::abs(letter)), p);
    return p;
}

std::vector<int> factor_letters(const perm& p0) {
    perm p = p0;
    const int n = static_cast<int>(p.size());
    std::vector<int> letters;
    for (;;) {
        int t = 0;
        for (int c = 1; c < n; ++c) {
            if (in_starting_set(p, c)) {
                t = c;
                break;
            }
        }
        if (t == 0) break;
        letters.push_back(t);
        std::swap(p[t - 1], p[t]);  // p o s_t
    }
    return letters;
}

braid_word word_of(const canonical_braid& cb) {
    const int n = cb.strands;
    std::vector<int> letters;
    std::vector<int> delta_letters;
    for (int i = 1; i < n; ++i)
        for (int j = i; j >= 1; --j) delta_letters.push_back(j);
    if (cb.delta_power >= 0) {
        for (int r = 0; r < cb.delta_power; ++r)
            letters.insert(letters.end(), delta_letters.begin(),
                           delta_letters.end());
    } else {
        for (int r = 0; r < -cb.delta_power; ++r)
            for (auto it = delta_letters.rbegin(); it != delta_letters.rend();
                 ++it)
                letters.push_back(-*it);
    }
    for (const perm& f : cb.factors) {
        const std::vector<int> fl = factor_letters(f);
        letters.insert(letters.end(), fl.begin(), fl.end());
    }
    return braid_word(n, std::move(letters));
}

std::string to_string(const canonical_braid& cb) {
    if (cb.is_identity()) return "identity";
    std::string out;
    if (cb.delta_power != 0) out += "D^" + std::to_string(cb.delta_power);
    for (const perm& f : cb.factors) {
        if (!out.empty()) out += " | ";
        const std::vector<int> fl = factor_letters(f);
        for (std::size_t i = 0; i < fl.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(fl[i]);
        }
    }
    return out;
}

std::string key_string(const canonical_braid& cb) {
    std::string out = std::to_string(cb.strands) + "^" +
                      std::to_string(cb.delta_power);
    for (const perm& f : cb.factors) {
        out += ':';
        for (int v : f) {
            out += std::to_string(v);
            out += ',';
        }
    }
    return out;
}

}  // namespace milnor
