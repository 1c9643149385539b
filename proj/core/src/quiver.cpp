#include "milnor/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace milnor {

namespace {

enum class entry_label { none, e, f };

// Differential entries have total degree 1.
entry_label diff_label(const tw_summand& s, const tw_summand& t) {
    if (t.vertex == s.vertex && t.grade == s.grade + 1) return entry_label::e;
    if (t.vertex == s.vertex + 1 && t.grade == s.grade) return entry_label::f;
    return entry_label::none;
}

// Components of a degree-0 morphism.
entry_label morphism_label(const tw_summand& s, const tw_summand& t) {
    if (t.vertex == s.vertex && t.grade == s.grade) return entry_label::e;
    if (t.vertex == s.vertex + 1 && t.grade == s.grade - 1)
        return entry_label::f;
    return entry_label::none;
}

std::string describe(const tw_summand& s) {
    std::ostringstream os;
    os << "(V_" << s.vertex << ", grade " << s.grade << ")";
    return os.str();
}

// Shape-only checks shared by make_complex and validate.
std::vector<std::string> shape_violations(const twisted_complex& C) {
    std::vector<std::string> out;
    if (C.m < 1) {
        out.push_back("m must be at least 1");
        return out;
    }
    const std::size_t N = C.summands.size();
    if (C.d.size() != N) {
        out.push_back("differential must be square of size " +
                      std::to_string(N));
        return out;
    }
    for (std::size_t t = 0; t < N; ++t) {
        if (C.d[t].size() != N) {
            out.push_back("differential row " + std::to_string(t) +
                          " has wrong length");
            return out;
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (C.summands[i].vertex < 1 || C.summands[i].vertex > C.m)
            out.push_back("summand " + std::to_string(i) +
                          " has vertex outside 1.." + std::to_string(C.m));
    }
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t s = 0; s < N; ++s)
            if (C.d[t][s] > 1)
                out.push_back("d[" + std::to_string(t) + "][" +
                              std::to_string(s) + "] is not 0 or 1");
    return out;
}

void require_valid(const twisted_complex& C, const char* who) {
    validation_result r = validate(C);
    if (r.ok) return;
    std::string msg = std::string(who) + ": invalid complex";
    for (const auto& v : r.violations) msg += "; " + v;
    throw std::invalid_argument(msg);
}

void check_rep_shape(const quiver_rep& R, const char* who) {
    const std::string w(who);
    if (R.m < 1) throw std::invalid_argument(w + ": m must be at least 1");
    if (static_cast<int>(R.dims.size()) != R.m)
        throw std::invalid_argument(w + ": dims must have length m");
    for (int d : R.dims)
        if (d < 0) throw std::invalid_argument(w + ": negative dimension");
    if (static_cast<int>(R.maps.size()) != R.m - 1)
        throw std::invalid_argument(w + ": maps must have length m-1");
    for (int i = 0; i + 1 < R.m; ++i) {
        if (R.maps[i].rows != R.dims[i + 1] || R.maps[i].cols != R.dims[i])
            throw std::invalid_argument(
                w + ": map " + std::to_string(i + 1) + " must be " +
                std::to_string(R.dims[i + 1]) + "x" +
                std::to_string(R.dims[i]));
    }
}

// Remove two summands (a < b assumed distinct) with their rows and columns.
twisted_complex drop_pair(const twisted_complex& C, std::size_t a,
                          std::size_t b) {
    twisted_complex out;
    out.m = C.m;
    const std::size_t N = C.summands.size();
    std::vector<std::size_t> keep;
    keep.reserve(N - 2);
    for (std::size_t i = 0; i < N; ++i)
        if (i != a && i != b) keep.push_back(i);
    out.summands.reserve(keep.size());
    for (std::size_t i : keep) out.summands.push_back(C.summands[i]);
    out.d.assign(keep.size(), std::vector<std::uint8_t>(keep.size(), 0));
    for (std::size_t t = 0; t < keep.size(); ++t)
        for (std::size_t s = 0; s < keep.size(); ++s)
            out.d[t][s] = C.d[keep[t]][keep[s]];
    return out;
}

}  // namespace

quiver_rep make_rep(int m, std::vector<int> dims,
                    std::vector<gf2::matrix> maps) {
    quiver_rep R{m, std::move(dims), std::move(maps)};
    check_rep_shape(R, "make_rep");
    return R;
}

twisted_complex make_complex(int m, std::vector<tw_summand> summands,
                             std::vector<std::vector<std::uint8_t>> d) {
    twisted_complex C{m, std::move(summands), std::move(d)};
    require_valid(C, "make_complex");
    return C;
}

twisted_complex interval_complex(int m, const interval_module& iv) {
    if (m < 1) throw std::invalid_argument("interval_complex: m < 1");
    if (iv.k < 0 || iv.l <= iv.k || iv.l > m)
        throw std::invalid_argument("interval_complex: need 0 <= k < l <= m");
    twisted_complex C;
    C.m = m;
    for (int v = iv.k + 1; v <= iv.l; ++v)
        C.summands.push_back({v, iv.shift});
    const std::size_t N = C.summands.size();
    C.d.assign(N, std::vector<std::uint8_t>(N, 0));
    for (std::size_t i = 0; i + 1 < N; ++i) C.d[i + 1][i] = 1;
    return C;
}

validation_result validate(const twisted_complex& C) {
    validation_result res;
    res.violations = shape_violations(C);
    if (!res.violations.empty()) {
        res.ok = false;
        return res;
    }
    const std::size_t N = C.summands.size();
    bool labels_ok = true;
    for (std::size_t t = 0; t < N; ++t) {
        for (std::size_t s = 0; s < N; ++s) {
            if (!C.d[t][s]) continue;
            if (diff_label(C.summands[s], C.summands[t]) ==
                entry_label::none) {
                labels_ok = false;
                res.violations.push_back(
                    "d[" + std::to_string(t) + "][" + std::to_string(s) +
                    "]: no degree-1 morphism from " + describe(C.summands[s]) +
                    " to " + describe(C.summands[t]));
            }
        }
    }
    if (labels_ok) {
        // d^2 entries from u to w compose as ee=e, ef=fe=f; a vertex jump of
        // two is the vanishing product f f and carries no constraint.
        for (std::size_t w = 0; w < N; ++w) {
            for (std::size_t u = 0; u < N; ++u) {
                if (C.summands[w].vertex - C.summands[u].vertex == 2) continue;
                unsigned parity = 0;
                for (std::size_t a = 0; a < N; ++a)
                    parity ^= static_cast<unsigned>(C.d[w][a] & C.d[a][u]);
                if (parity)
                    res.violations.push_back(
                        "d^2 has a nonzero component from summand " +
                        std::to_string(u) + " to summand " +
                        std::to_string(w));
            }
        }
    }
    res.ok = res.violations.empty();
    return res;
}

twisted_complex reduce(twisted_complex C) {
    require_valid(C, "reduce");
    for (;;) {
        const std::size_t N = C.summands.size();
        std::size_t a = N, b = N;
        for (std::size_t t = 0; t < N && b == N; ++t) {
            for (std::size_t s = 0; s < N; ++s) {
                if (C.d[t][s] &&
                    diff_label(C.summands[s], C.summands[t]) ==
                        entry_label::e) {
                    a = s;
                    b = t;
                    break;
                }
            }
        }
        if (b == N) return C;
        // Gaussian elimination of the invertible entry a -> b: the
        // correction d[w][u] ^= d[w][a] d[b][u] is skipped when the composed
        // label is the vanishing product f f (vertex jump two).
        for (std::size_t u = 0; u < N; ++u) {
            if (u == a || u == b || !C.d[b][u]) continue;
            for (std::size_t w = 0; w < N; ++w) {
                if (w == a || w == b || !C.d[w][a]) continue;
                if (C.summands[w].vertex - C.summands[u].vertex == 2) continue;
                C.d[w][u] ^= 1;
            }
        }
        C = drop_pair(C, std::min(a, b), std::max(a, b));
    }
}

validation_result validate_morphism(const tw_morphism& f) {
    validation_result res;
    auto src = validate(f.source);
    for (const auto& v : src.violations)
        res.violations.push_back("source: " + v);
    auto tgt = validate(f.target);
    for (const auto& v : tgt.violations)
        res.violations.push_back("target: " + v);
    if (f.source.m != f.target.m)
        res.violations.push_back("source and target have different m");
    if (!res.violations.empty()) {
        res.ok = false;
        return res;
    }
    const std::size_t NX = f.source.summands.size();
    const std::size_t NY = f.target.summands.size();
    if (f.comp.size() != NY) {
        res.ok = false;
        res.violations.push_back("component matrix must have " +
                                 std::to_string(NY) + " rows");
        return res;
    }
    for (std::size_t t = 0; t < NY; ++t) {
        if (f.comp[t].size() != NX) {
            res.ok = false;
            res.violations.push_back("component row " + std::to_string(t) +
                                     " has wrong length");
            return res;
        }
    }
    bool labels_ok = true;
    for (std::size_t t = 0; t < NY; ++t) {
        for (std::size_t s = 0; s < NX; ++s) {
            if (!f.comp[t][s]) continue;
            if (f.comp[t][s] > 1) {
                labels_ok = false;
                res.violations.push_back("component [" + std::to_string(t) +
                                         "][" + std::to_string(s) +
                                         "] is not 0 or 1");
                continue;
            }
            if (morphism_label(f.source.summands[s], f.target.summands[t]) ==
                entry_label::none) {
                labels_ok = false;
                res.violations.push_back(
                    "component [" + std::to_string(t) + "][" +
                    std::to_string(s) + "]: no degree-0 morphism from " +
                    describe(f.source.summands[s]) + " to " +
                    describe(f.target.summands[t]));
            }
        }
    }
    if (labels_ok) {
        // Closedness: d_Y f = f d_X componentwise, again dropping the
        // vanishing f f composites (vertex jump two).
        for (std::size_t u = 0; u < NX; ++u) {
            for (std::size_t t = 0; t < NY; ++t) {
                if (f.target.summands[t].vertex -
                        f.source.summands[u].vertex ==
                    2)
                    continue;
                unsigned parity = 0;
                for (std::size_t a = 0; a < NY; ++a)
                    parity ^= static_cast<unsigned>(f.target.d[t][a] &
                                                    f.comp[a][u]);
                for (std::size_t b = 0; b < NX; ++b)
                    parity ^= static_cast<unsigned>(f.comp[t][b] &
                                                    f.source.d[b][u]);
                if (parity)
                    res.violations.push_back(
                        "not closed: (d f + f d) is nonzero from source "
                        "summand " +
                        std::to_string(u) + " to target summand " +
                        std::to_string(t));
            }
        }
    }
    res.ok = res.violations.empty();
    return res;
}

twisted_complex cone(const tw_morphism& f) {
    auto r = validate_morphism(f);
    if (!r.ok) {
        std::string msg = "cone: morphism rejected";
        for (const auto& v : r.violations) msg += "; " + v;
        throw std::invalid_argument(msg);
    }
    const std::size_t NX = f.source.summands.size();
    const std::size_t NY = f.target.summands.size();
    twisted_complex out;
    out.m = f.source.m;
    out.summands.reserve(NX + NY);
    for (const auto& s : f.source.summands)
        out.summands.push_back({s.vertex, s.grade - 1});
    for (const auto& s : f.target.summands) out.summands.push_back(s);
    out.d.assign(NX + NY, std::vector<std::uint8_t>(NX + NY, 0));
    for (std::size_t t = 0; t < NX; ++t)
        for (std::size_t s = 0; s < NX; ++s) out.d[t][s] = f.source.d[t][s];
    for (std::size_t t = 0; t < NY; ++t)
        for (std::size_t s = 0; s < NY; ++s)
            out.d[NX + t][NX + s] = f.target.d[t][s];
    for (std::size_t t = 0; t < NY; ++t)
        for (std::size_t s = 0; s < NX; ++s) out.d[NX + t][s] = f.comp[t][s];
    return out;
}

std::vector<std::pair<int, quiver_rep>> split_by_degree(
    const twisted_complex& C) {
    require_valid(C, "split_by_degree");
    const std::size_t N = C.summands.size();
    for (std::size_t t = 0; t < N; ++t)
        for (std::size_t s = 0; s < N; ++s)
            if (C.d[t][s] &&
                diff_label(C.summands[s], C.summands[t]) == entry_label::e)
                throw std::invalid_argument(
                    "split_by_degree: complex is not reduced");
    // grade -> vertex -> ordered summand indices
    std::map<int, std::vector<std::vector<int>>> slots;
    for (std::size_t i = 0; i < N; ++i) {
        auto& per_vertex = slots[C.summands[i].grade];
        if (per_vertex.empty()) per_vertex.assign(C.m + 1, {});
        per_vertex[C.summands[i].vertex].push_back(static_cast<int>(i));
    }
    std::vector<std::pair<int, quiver_rep>> out;
    out.reserve(slots.size());
    for (const auto& [grade, per_vertex] : slots) {
        quiver_rep R;
        R.m = C.m;
        R.dims.resize(C.m);
        for (int v = 1; v <= C.m; ++v)
            R.dims[v - 1] = static_cast<int>(per_vertex[v].size());
        R.maps.reserve(C.m - 1);
        for (int v = 1; v < C.m; ++v) {
            gf2::matrix M(R.dims[v], R.dims[v - 1]);
            for (int r = 0; r < M.rows; ++r)
                for (int c = 0; c < M.cols; ++c)
                    if (C.d[per_vertex[v + 1][r]][per_vertex[v][c]])
                        M.set(r, c, true);
            R.maps.push_back(std::move(M));
        }
        out.emplace_back(grade, std::move(R));
    }
    return out;
}

barcode decompose(const quiver_rep& R) {
    check_rep_shape(R, "decompose");
    const int m = R.m;
    // rank_table[i][j], 1-based, rank of the composite W_i -> W_j.
    std::vector<std::vector<int>> rank_table(m + 1,
                                             std::vector<int>(m + 1, 0));
    for (int i = 1; i <= m; ++i) {
        gf2::matrix comp = gf2::identity(R.dims[i - 1]);
        rank_table[i][i] = R.dims[i - 1];
        for (int j = i + 1; j <= m; ++j) {
            comp = gf2::multiply(R.maps[j - 2], comp);
            rank_table[i][j] = gf2::rank(comp);
        }
    }
    auto r = [&](int i, int j) -> int {
        if (i < 1 || j > m || i > j) return 0;
        return rank_table[i][j];
    };
    barcode out;
    for (int p = 1; p <= m; ++p) {
        for (int q = p; q <= m; ++q) {
            int mult = r(p, q) - r(p - 1, q) - r(p, q + 1) + r(p - 1, q + 1);
            if (mult < 0)
                throw std::logic_error(
                    "decompose: negative interval multiplicity");
            if (mult > 0) out.push_back({{p - 1, q, 0}, mult});
        }
    }
    return out;
}

barcode graded_barcode(const twisted_complex& C) {
    barcode all;
    for (auto& [grade, rep] : split_by_degree(reduce(C))) {
        for (auto& b : decompose(rep)) {
            b.iv.shift = grade;
            all.push_back(b);
        }
    }
    std::sort(all.begin(), all.end(),
              [](const bar& x, const bar& y) { return x.iv < y.iv; });
    return all;
}

twisted_complex iterated_twist(int m, int k, int l) {
    if (m < 1) throw std::invalid_argument("iterated_twist: m < 1");
    if (k < 0 || l <= k || l > m)
        throw std::invalid_argument("iterated_twist: need 0 <= k < l <= m");
    twisted_complex C = make_complex(m, {{l, 0}}, {{0}});
    for (int j = l - 1; j >= k + 1; --j) {
        // Basis of hom(V_j, C): an e_j for every summand at vertex j (hom
        // degree = its grade) and an f_j into every summand at vertex j+1
        // (hom degree = grade + 1).
        struct hom_elt {
            int target;  // summand index in C
            int degree;
            bool is_f;
        };
        std::vector<hom_elt> basis;
        const int NC = static_cast<int>(C.summands.size());
        for (int i = 0; i < NC; ++i)
            if (C.summands[i].vertex == j)
                basis.push_back({i, C.summands[i].grade, false});
        for (int i = 0; i < NC; ++i)
            if (C.summands[i].vertex == j + 1)
                basis.push_back({i, C.summands[i].grade + 1, true});
        const int NB = static_cast<int>(basis.size());
        // hom(V_j, C) tensor V_j: copies of V_j in the hom degrees, with the
        // differential of post-composition by d_C.
        tw_morphism ev;
        ev.source.m = m;
        for (const auto& h : basis) ev.source.summands.push_back({j, h.degree});
        ev.source.d.assign(NB, std::vector<std::uint8_t>(NB, 0));
        // Post-composition with d_C. Terms whose composed label vanishes
        // (f after f) land at vertex j+2, which no basis element targets, so
        // restricting y to the basis drops them automatically.
        for (int x = 0; x < NB; ++x)
            for (int y = 0; y < NB; ++y)
                ev.source.d[y][x] = C.d[basis[y].target][basis[x].target];
        ev.target = C;
        ev.comp.assign(NC, std::vector<std::uint8_t>(NB, 0));
        for (int x = 0; x < NB; ++x) ev.comp[basis[x].target][x] = 1;
        C = reduce(cone(ev));
    }
    return C;
}

bool summand_test(const twisted_complex& C, const interval_module& target) {
    for (const auto& b : graded_barcode(C))
        if (b.iv.k == target.k && b.iv.l == target.l) return true;
    return false;
}

}  // namespace milnor
