#include "milnor/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

namespace milnor {

namespace {

int sigma_for(int n) {
    // (-1)^{(n+1)(n+2)/2}
    const long long e = static_cast<long long>(n + 1) * (n + 2) / 2;
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace

thimble_lattice make_lattice(int m, int n,
                             std::optional<homology_class> final_class,
                             handedness hand) {
    if (m < 1) throw std::invalid_argument("make_lattice: m < 1");
    if (n < 2 || n % 2 == 0)
        throw std::invalid_argument("make_lattice: n must be odd and >= 3");
    if (final_class && static_cast<int>(final_class->a.size()) != m)
        throw std::invalid_argument("make_lattice: class length != m");
    thimble_lattice L;
    L.m = m;
    L.n = n;
    L.sigma = sigma_for(n);
    L.pairing = intersection_matrix(m, make_convention(n, hand));
    L.final_class = std::move(final_class);
    return L;
}

long long linking_pairing(const thimble_lattice& L, int i, int j) {
    const int top = L.m + 1;
    if (i < 1 || j < 1 || i > top || j > top)
        throw std::invalid_argument("linking_pairing: index out of range");
    if (i == j) return L.sigma;
    if (i > j) return 0;
    // (-1)^{n+1} V_i . V_j; n odd makes the sign +1, kept explicit anyway.
    const long long sgn = (L.n + 1) % 2 == 0 ? 1 : -1;
    auto cycle_pair = [&](int r, int c) -> long long {
        // V_r . V_c for 1-based r, c where index m+1 uses final_class.
        if (r <= L.m && c <= L.m) return L.pairing[r - 1][c - 1];
        if (!L.final_class)
            throw std::invalid_argument(
                "linking_pairing: index m+1 needs the final vanishing class");
        const ivec& a = L.final_class->a;
        if (r == top && c == top) return 0;  // antisymmetric form
        if (c == top) {
            long long v = 0;
            for (int t = 1; t <= L.m; ++t) v += a[t - 1] * L.pairing[r - 1][t - 1];
            return v;
        }
        long long v = 0;
        for (int t = 1; t <= L.m; ++t) v += a[t - 1] * L.pairing[t - 1][c - 1];
        return v;
    };
    return sgn * cycle_pair(i, j);
}

long long self_intersection(const thimble_lattice& L,
                            const generator_class& x) {
    const ivec& a = x.a.a;
    if (static_cast<int>(a.size()) != L.m)
        throw std::invalid_argument("self_intersection: class length != m");
    long long sq = 0, adj = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sq += a[i] * a[i];
        if (i > 0) adj += a[i] * a[i - 1];
    }
    return L.sigma * (1 - adj + sq);
}

long long am_quadratic(const homology_class& cls) {
    const ivec& a = cls.a;
    long long sq = 0, adj = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sq += a[i] * a[i];
        if (i + 1 < a.size()) adj += a[i] * a[i + 1];
    }
    return 2 * sq - 2 * adj;
}

std::optional<std::pair<int, int>> is_interval_vector(
    const homology_class& cls) {
    const ivec& a = cls.a;
    const int m = static_cast<int>(a.size());
    int first = -1, last = -1;
    long long sign = 0;
    for (int i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        if (a[i] != 1 && a[i] != -1) return std::nullopt;
        if (first == -1) {
            first = i;
            sign = a[i];
        }
        if (a[i] != sign) return std::nullopt;
        last = i;
    }
    if (first == -1) return std::nullopt;
    for (int i = first; i <= last; ++i)
        if (a[i] != sign) return std::nullopt;
    return std::make_pair(first, last + 1);
}

diffeo_result diffeo_type(int n, const std::optional<homology_class>& a) {
    if (n < 2)
        throw std::invalid_argument(
            "diffeo_type: n must be >= 2 (in dimension n = 1 the fundamental "
            "group at infinity obstructs this classification)");
    if (n % 2 == 0) {
        if (a)
            throw std::invalid_argument(
                "diffeo_type: even n takes no homology class");
        return diffeo_result{diffeo_kind::standard_cotangent, std::nullopt};
    }
    if (!a)
        throw std::invalid_argument("diffeo_type: odd n needs a class");
    if (is_interval_vector(*a))
        return diffeo_result{diffeo_kind::standard_cotangent, std::nullopt};
    thimble_lattice L =
        make_lattice(static_cast<int>(a->a.size()), n, std::nullopt);
    return diffeo_result{diffeo_kind::distinguished_by_pairing,
                         self_intersection(L, generator_class{*a})};
}

}  // namespace milnor
