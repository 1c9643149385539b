#pragma once

// Shared test helpers for quiver representations: an independent rank-table
// oracle, direct sums, reconstruction of a representation from a barcode, and
// random representations.

#include <random>
#include <vector>

#include "milnor/quiver.hpp"

namespace quiver_util {

// r[i][j] = rank of the composite rho_{j-1} ... rho_i : W_i -> W_j for
// 1 <= i <= j <= m; r[i][i] = dim W_i. Other cells stay 0.
inline std::vector<std::vector<int>> rank_table_of(const milnor::quiver_rep& R) {
    std::vector<std::vector<int>> r(
        static_cast<std::size_t>(R.m) + 1,
        std::vector<int>(static_cast<std::size_t>(R.m) + 1, 0));
    for (int i = 1; i <= R.m; ++i) {
        r[i][i] = R.dims[static_cast<std::size_t>(i - 1)];
        milnor::gf2::matrix comp =
            milnor::gf2::identity(R.dims[static_cast<std::size_t>(i - 1)]);
        for (int j = i + 1; j <= R.m; ++j) {
            comp = milnor::gf2::multiply(R.maps[static_cast<std::size_t>(j - 2)],
                                         comp);
            r[i][j] = milnor::gf2::rank(comp);
        }
    }
    return r;
}

inline milnor::quiver_rep direct_sum(const milnor::quiver_rep& a,
                                     const milnor::quiver_rep& b) {
    std::vector<int> dims(static_cast<std::size_t>(a.m));
    for (int v = 0; v < a.m; ++v)
        dims[static_cast<std::size_t>(v)] = a.dims[static_cast<std::size_t>(v)] +
                                            b.dims[static_cast<std::size_t>(v)];
    std::vector<milnor::gf2::matrix> maps;
    for (int v = 0; v + 1 < a.m; ++v) {
        const auto& ma = a.maps[static_cast<std::size_t>(v)];
        const auto& mb = b.maps[static_cast<std::size_t>(v)];
        milnor::gf2::matrix blk(ma.rows + mb.rows, ma.cols + mb.cols);
        for (int r = 0; r < ma.rows; ++r)
            for (int c = 0; c < ma.cols; ++c)
                if (ma.get(r, c)) blk.set(r, c, true);
        for (int r = 0; r < mb.rows; ++r)
            for (int c = 0; c < mb.cols; ++c)
                if (mb.get(r, c)) blk.set(ma.rows + r, ma.cols + c, true);
        maps.push_back(blk);
    }
    return milnor::make_rep(a.m, std::move(dims), std::move(maps));
}

// Direct sum of interval modules with identity block maps.
inline milnor::quiver_rep rep_of_barcode(int m, const milnor::barcode& bars) {
    std::vector<int> dims(static_cast<std::size_t>(m), 0);
    // offset[b][v] = first slot of bar b at vertex v+1.
    std::vector<std::vector<int>> offset;
    for (const milnor::bar& b : bars) {
        std::vector<int> off(static_cast<std::size_t>(m), -1);
        for (int v = b.iv.k + 1; v <= b.iv.l; ++v) {
            off[static_cast<std::size_t>(v - 1)] =
                dims[static_cast<std::size_t>(v - 1)];
            dims[static_cast<std::size_t>(v - 1)] += b.mult;
        }
        offset.push_back(std::move(off));
    }
    std::vector<milnor::gf2::matrix> maps;
    for (int v = 1; v < m; ++v) {
        milnor::gf2::matrix blk(dims[static_cast<std::size_t>(v)],
                                dims[static_cast<std::size_t>(v - 1)]);
        for (std::size_t b = 0; b < bars.size(); ++b) {
            const int src = offset[b][static_cast<std::size_t>(v - 1)];
            const int dst = offset[b][static_cast<std::size_t>(v)];
            if (src < 0 || dst < 0) continue;
            for (int t = 0; t < bars[b].mult; ++t) blk.set(dst + t, src + t, true);
        }
        maps.push_back(std::move(blk));
    }
    return milnor::make_rep(m, std::move(dims), std::move(maps));
}

inline milnor::quiver_rep random_rep(std::mt19937& rng, int m, int maxdim) {
    std::uniform_int_distribution<int> dim(0, maxdim);
    std::bernoulli_distribution bit(0.5);
    std::vector<int> dims(static_cast<std::size_t>(m));
    for (auto& d : dims) d = dim(rng);
    std::vector<milnor::gf2::matrix> maps;
    for (int v = 0; v + 1 < m; ++v) {
        milnor::gf2::matrix mat(dims[static_cast<std::size_t>(v + 1)],
                                dims[static_cast<std::size_t>(v)]);
        for (int r = 0; r < mat.rows; ++r)
            for (int c = 0; c < mat.cols; ++c)
                if (bit(rng)) mat.set(r, c, true);
        maps.push_back(std::move(mat));
    }
    return milnor::make_rep(m, std::move(dims), std::move(maps));
}

}  // namespace quiver_util
