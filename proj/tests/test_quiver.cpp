#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "milnor/quiver.hpp"
#include "quiver_util.hpp"

using namespace milnor;
using quiver_util::direct_sum;
using quiver_util::random_rep;
using quiver_util::rank_table_of;
using quiver_util::rep_of_barcode;

namespace {

gf2::matrix mat(int rows, int cols, std::vector<int> entries) {
    gf2::matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (entries[static_cast<std::size_t>(r * cols + c)])
                m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("make_rep checks shapes") {
    CHECK_NOTHROW(make_rep(2, {1, 1}, {mat(1, 1, {1})}));
    CHECK_THROWS_AS(make_rep(2, {1, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_rep(2, {1, 1}, {mat(2, 1, {1, 0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_rep(2, {1}, {mat(1, 1, {1})}), std::invalid_argument);
    CHECK_THROWS_AS(make_rep(0, {}, {}), std::invalid_argument);
}

TEST_CASE("decompose pinned small cases") {
    CHECK(decompose(make_rep(1, {3}, {})) == barcode{{{0, 1, 0}, 3}});
    CHECK(decompose(make_rep(2, {1, 1}, {mat(1, 1, {1})})) ==
          barcode{{{0, 2, 0}, 1}});
    CHECK(decompose(make_rep(2, {1, 1}, {mat(1, 1, {0})})) ==
          barcode{{{0, 1, 0}, 1}, {{1, 2, 0}, 1}});
    CHECK(decompose(make_rep(3, {0, 1, 0}, {mat(1, 0, {}), mat(0, 1, {})})) ==
          barcode{{{1, 2, 0}, 1}});
    CHECK(decompose(make_rep(2, {0, 0}, {mat(0, 0, {})})).empty());
}

TEST_CASE("decompose inverts rep_of_barcode") {
    const barcode bars{{{0, 1, 0}, 2}, {{0, 3, 0}, 1}, {{1, 2, 0}, 1},
                       {{2, 3, 0}, 3}};
    CHECK(decompose(rep_of_barcode(3, bars)) == bars);
}

TEST_CASE("decompose is additive over direct sums") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + trial % 4;
        const quiver_rep a = random_rep(rng, m, 3);
        const quiver_rep b = random_rep(rng, m, 3);
        barcode merged;
        for (const bar& x : decompose(a)) merged.push_back(x);
        for (const bar& x : decompose(b)) {
            auto it = std::find_if(merged.begin(), merged.end(),
                                   [&](const bar& y) { return y.iv == x.iv; });
            if (it == merged.end())
                merged.push_back(x);
            else
                it->mult += x.mult;
        }
        std::sort(merged.begin(), merged.end(),
                  [](const bar& x, const bar& y) { return x.iv < y.iv; });
        CHECK(decompose(direct_sum(a, b)) == merged);
    }
}

TEST_CASE("barcode reconstruction preserves all composite ranks") {
    std::mt19937 rng(89);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 2 + trial % 4;
        const quiver_rep r = random_rep(rng, m, 4);
        const quiver_rep back = rep_of_barcode(m, decompose(r));
        CHECK(rank_table_of(back) == rank_table_of(r));
    }
}

TEST_CASE("interval_complex is a valid reduced f-chain") {
    const twisted_complex c = interval_complex(3, {0, 3, 2});
    CHECK(c.summands.size() == 3);
    for (const tw_summand& s : c.summands) CHECK(s.grade == 2);
    CHECK(validate(c).ok);
    CHECK(reduce(c) == c);
    CHECK(graded_barcode(c) == barcode{{{0, 3, 2}, 1}});
    CHECK_THROWS_AS(interval_complex(2, {0, 3, 0}), std::invalid_argument);
}

TEST_CASE("validate flags pattern and d^2 violations") {
    // Entry from grade 0 to grade 2 at the same vertex: no legal label.
    twisted_complex bad;
    bad.m = 2;
    bad.summands = {{1, 0}, {1, 2}};
    bad.d = {{0, 0}, {1, 0}};
    const validation_result r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());

    // Three e-entries in a row: d^2 has a nonzero e e = e component.
    twisted_complex chain;
    chain.m = 1;
    chain.summands = {{1, 0}, {1, 1}, {1, 2}};
    chain.d = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK_FALSE(validate(chain).ok);

    // Dropping one of the entries restores d^2 = 0.
    chain.d[2][1] = 0;
    CHECK(validate(chain).ok);

    CHECK_THROWS_AS(make_complex(1, {{1, 0}, {1, 2}}, {{0, 0}, {1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("reduce cancels e-pairs") {
    // V_1 --e--> V_1: contractible.
    const twisted_complex c = make_complex(2, {{1, 0}, {1, 1}}, {{0, 0}, {1, 0}});
    const twisted_complex r = reduce(c);
    CHECK(r.summands.empty());
    CHECK(graded_barcode(c).empty());
}

TEST_CASE("reduce keeps the homotopy type through zigzag corrections") {
    // V_1(g0) -e-> V_1(g1), V_1(g0) -f-> V_2(g0), so cancelling the e-pair
    // must not change the barcode.
    const twisted_complex c = make_complex(
        2, {{1, 0}, {1, 1}, {2, 0}},
        {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}});
    CHECK(validate(c).ok);
    const twisted_complex r = reduce(c);
    CHECK(validate(r).ok);
    CHECK(r == reduce(r));
    // The e-pair carries the first V_1 copy away; only V_2 survives.
    CHECK(graded_barcode(r) == barcode{{{1, 2, 0}, 1}});
}

TEST_CASE("cone of the identity is contractible") {
    for (int v = 1; v <= 3; ++v) {
        const twisted_complex x = interval_complex(3, {v - 1, v, 0});
        tw_morphism id;
        id.source = x;
        id.target = x;
        id.comp = {{1}};
        CHECK(validate_morphism(id).ok);
        CHECK(reduce(cone(id)).summands.empty());
    }
}

TEST_CASE("cone shifts the source down one grade") {
    const twisted_complex x = interval_complex(2, {0, 1, 0});
    const twisted_complex y = interval_complex(2, {0, 1, 5});
    tw_morphism zero;
    zero.source = x;
    zero.target = y;
    zero.comp = {{0}};
    CHECK(validate_morphism(zero).ok);
    const twisted_complex c = cone(zero);
    REQUIRE(c.summands.size() == 2);
    CHECK(c.summands[0].grade == -1);
    CHECK(c.summands[1].grade == 5);
    CHECK(graded_barcode(c) == barcode{{{0, 1, -1}, 1}, {{0, 1, 5}, 1}});
}

TEST_CASE("validate_morphism rejects bad components") {
    const twisted_complex v1 = interval_complex(2, {0, 1, 0});
    const twisted_complex v2 = interval_complex(2, {1, 2, 0});
    tw_morphism f;
    f.source = v1;
    f.target = v2;
    f.comp = {{1}};  // vertex 1 -> 2 at equal grades: f-label needs grade -1
    CHECK_FALSE(validate_morphism(f).ok);
    CHECK_THROWS_AS(cone(f), std::invalid_argument);

    const twisted_complex v2s = interval_complex(2, {1, 2, -1});
    tw_morphism g;
    g.source = v1;
    g.target = v2s;
    g.comp = {{1}};
    CHECK(validate_morphism(g).ok);
}

TEST_CASE("split_by_degree separates grades and rejects unreduced input") {
    const twisted_complex c = make_complex(
        2, {{1, 0}, {2, 0}, {1, 4}},
        {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
    const auto parts = split_by_degree(c);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == 0);
    CHECK(parts[0].second.dims == std::vector<int>{1, 1});
    CHECK(decompose(parts[0].second) == barcode{{{0, 2, 0}, 1}});
    CHECK(parts[1].first == 4);
    CHECK(parts[1].second.dims == std::vector<int>{1, 0});

    const twisted_complex unreduced =
        make_complex(1, {{1, 0}, {1, 1}}, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(split_by_degree(unreduced), std::invalid_argument);
}

TEST_CASE("iterated_twist produces a single interval summand") {
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k < m; ++k)
            for (int l = k + 1; l <= m; ++l) {
                const twisted_complex c = iterated_twist(m, k, l);
                CHECK(validate(c).ok);
                const barcode bars = graded_barcode(c);
                REQUIRE(bars.size() == 1);
                CHECK(bars[0].iv.k == k);
                CHECK(bars[0].iv.l == l);
                CHECK(bars[0].mult == 1);
                CHECK(summand_test(c, {k, l, 0}));
                for (int k2 = 0; k2 < m; ++k2)
                    for (int l2 = k2 + 1; l2 <= m; ++l2)
                        if (k2 != k || l2 != l)
                            CHECK_FALSE(summand_test(c, {k2, l2, 0}));
            }
}

TEST_CASE("summand_test ignores the shift") {
    const twisted_complex c = interval_complex(3, {1, 3, -4});
    CHECK(summand_test(c, {1, 3, 0}));
    CHECK(summand_test(c, {1, 3, 7}));
    CHECK_FALSE(summand_test(c, {0, 3, -4}));
}
