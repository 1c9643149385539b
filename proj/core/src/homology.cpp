#include "milnor/homology.hpp"

#include <stdexcept>

namespace milnor {

namespace {

void normalize_sign(ivec& a) {
    for (long long v : a) {
        if (v > 0) return;
        if (v < 0) {
            for (long long& w : a) w = -w;
            return;
        }
    }
}

// x . V_i = x^T B e_i = epsilon x_{i-1} - epsilon x_{i+1}, i 1-based.
long long pair_with_cycle(const ivec& x, int i, int epsilon) {
    const int m = static_cast<int>(x.size());
    long long v = 0;
    if (i - 2 >= 0) v += epsilon * x[i - 2];
    if (i < m) v -= epsilon * x[i];
    return v;
}

}  // namespace

sign_convention make_convention(int n, handedness hand) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("sign convention needs odd n >= 3");
    const int r = (n * (n + 1) / 2 + 1) % 2;
    sign_convention conv;
    conv.n = n;
    conv.epsilon = r == 0 ? 1 : -1;
    conv.hand = hand;
    return conv;
}

homology_class make_class(ivec a) {
    normalize_sign(a);
    return homology_class{std::move(a)};
}

imat intersection_matrix(int m, const sign_convention& conv) {
    if (m < 1) throw std::invalid_argument("intersection_matrix: m < 1");
    imat B(m, ivec(m, 0));
    for (int i = 0; i + 1 < m; ++i) {
        B[i][i + 1] = conv.epsilon;
        B[i + 1][i] = -conv.epsilon;
    }
    return B;
}

homology_class generator_action(int i, int sign, const homology_class& x,
                                const sign_convention& conv) {
    const int m = static_cast<int>(x.a.size());
    if (i < 1 || i > m)
        throw std::invalid_argument("generator_action: index out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("generator_action: sign must be +-1");
    const int s = conv.hand == handedness::right ? -conv.epsilon : conv.epsilon;
    ivec a = x.a;
    a[i - 1] += sign * s * pair_with_cycle(x.a, i, conv.epsilon);
    // No sign normalization here: the transvection is an honest linear map,
    // so inverses and the pairing are preserved on the nose. Orientation is
    // only quotiented out when a final class is reported (arc_class).
    return homology_class{std::move(a)};
}

imat braid_rep(const braid_word& b, const sign_convention& conv) {
    const int m = b.strands - 1;
    // M = M(l_1) M(l_2) ... M(l_r), acting on column vectors; built by
    // right-multiplying one transvection at a time.
    imat M(m, ivec(m, 0));
    for (int i = 0; i < m; ++i) M[i][i] = 1;
    const int s0 = conv.hand == handedness::right ? -conv.epsilon : conv.epsilon;
    for (int letter : b.letters) {
        const int i = std::abs(letter) - 1;
        const long long s = (letter > 0 ? s0 : -s0);
        // T_{kj} = delta_{kj} + s [k = i] B_{ji}, so right-multiplication
        // touches only columns i-1 and i+1:
        // (M T)_{r,i-1} += M_{ri} s epsilon, (M T)_{r,i+1} -= M_{ri} s epsilon.
        for (int r = 0; r < m; ++r) {
            const long long mi = M[r][i];
            if (mi == 0) continue;
            if (i - 1 >= 0) M[r][i - 1] += s * mi * conv.epsilon;
            if (i + 1 < m) M[r][i + 1] -= s * mi * conv.epsilon;
        }
    }
    return M;
}

homology_class arc_class(const arc& a, const sign_convention& conv) {
    if (conv.hand != a.hand)
        throw std::invalid_argument("arc_class: handedness mismatch");
    const int m = a.m;
    ivec base(m, 0);
    for (int i = a.base.k; i < a.base.l; ++i) base[i] = 1;
    const imat M = braid_rep(a.conjugator, conv);
    ivec out(m, 0);
    for (int r = 0; r < m; ++r) {
        long long v = 0;
        for (int c = 0; c < m; ++c) v += M[r][c] * base[c];
        out[r] = v;
    }
    return make_class(std::move(out));
}

}  // namespace milnor
