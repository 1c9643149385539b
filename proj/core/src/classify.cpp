#include "milnor/classify.hpp"

#include <stdexcept>

namespace milnor {

classification_report classify(int m, int n, const arc& a) {
    if (m < 2) throw std::invalid_argument("classify: m must be >= 2");
    if (n == 1)
        throw std::invalid_argument(
            "classify: n = 1 is excluded; the fundamental group at infinity "
            "obstructs the classification in that dimension");
    if (n < 2) throw std::invalid_argument("classify: n must be >= 2");
    if (a.m != m)
        throw std::invalid_argument(
            "classify: arc lives in a disc with a different puncture count");
    classification_report rep;
    rep.m = m;
    rep.n = n;
    rep.input = a;
    rep.half_twist_nf = to_string(a.key);
    rep.matched_segment = match_segment(a);
    rep.symplectic = rep.matched_segment
                         ? symplectic_kind::standard_cotangent
                         : symplectic_kind::exotic_structure;
    if (n % 2 == 1) {
        sign_convention conv = make_convention(n, a.hand);
        homology_class cls = arc_class(a, conv);
        thimble_lattice L = make_lattice(m, n, cls, a.hand);
        rep.self_int = self_intersection(L, generator_class{cls});
        rep.diffeo = diffeo_type(n, cls);
        rep.h_class = std::move(cls);
    } else {
        rep.diffeo = diffeo_type(n, std::nullopt);
    }
    return rep;
}

long long standard_count(int m) {
    if (m < 1) throw std::invalid_argument("standard_count: m must be >= 1");
    return static_cast<long long>(m) * (m + 1) / 2;
}

}  // namespace milnor
