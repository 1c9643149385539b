#include "milnor/gf2.hpp"

namespace milnor::gf2 {

matrix identity(int n) {
    matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

matrix multiply(const matrix& a, const matrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("gf2::multiply: shape mismatch");
    matrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        std::uint64_t acc = 0;
        std::uint64_t row = a.bits[i];
        while (row) {
            const int k = __builtin_ctzll(row);
            row &= row - 1;
            acc ^= b.bits[k];
        }
        r.bits[i] = acc;
    }
    return r;
}

int rank(matrix a) {
    int rk = 0;
    for (int c = 0; c < a.cols && rk < a.rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < a.rows; ++r) {
            if (a.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a.bits[rk], a.bits[pivot]);
        for (int r = 0; r < a.rows; ++r)
            if (r != rk && a.get(r, c)) a.bits[r] ^= a.bits[rk];
        ++rk;
    }
    return rk;
}

}  // namespace milnor::gf2
