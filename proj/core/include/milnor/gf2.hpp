#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace milnor::gf2 {

// Dense matrix over the two-element field, one 64-bit word per row.
// Dimensions are capped at 64 columns; everything in this project is tiny.
struct matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint64_t> bits;  // bits[r] bit c = entry (r, c)

    matrix() = default;
    matrix(int rows_, int cols_) : rows(rows_), cols(cols_), bits(rows_, 0) {
        if (rows_ < 0 || cols_ < 0 || cols_ > 64)
            throw std::invalid_argument("gf2::matrix: bad shape");
    }

    bool get(int r, int c) const { return (bits[r] >> c) & 1u; }
    void set(int r, int c, bool v) {
        if (v)
            bits[r] |= std::uint64_t{1} << c;
        else
            bits[r] &= ~(std::uint64_t{1} << c);
    }
    bool operator==(const matrix&) const = default;
};

matrix identity(int n);
matrix multiply(const matrix& a, const matrix& b);
int rank(matrix a);

}  // namespace milnor::gf2
