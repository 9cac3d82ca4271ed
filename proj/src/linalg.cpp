#include "motivic/linalg.hpp"

#include <algorithm>

namespace motivic {

int rref(RatMatrix& m) {
    if (m.empty())
        return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        const Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

int rank(RatMatrix m) {
    return rref(m);
}

RatMatrix kernel_basis(const RatMatrix& m, size_t cols) {
    RatMatrix a = m;
    for (auto& row : a)
        row.resize(cols, Rat(0));
    const int rk = rref(a);
    std::vector<long> pivot_of_col(cols, -1);
    for (int r = 0; r < rk; ++r) {
        size_t c = 0;
        while (c < cols && a[static_cast<size_t>(r)][c] == 0)
            ++c;
        if (c < cols)
            pivot_of_col[c] = r;
    }
    RatMatrix out;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != -1)
            continue;
        RatRow v(cols, Rat(0));
        v[c] = 1;
        for (size_t cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] != -1)
                v[cc] = -a[static_cast<size_t>(pivot_of_col[cc])][c];
        out.push_back(std::move(v));
    }
    return out;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    size_t cols = 0;
    for (const auto& r : a)
        cols = std::max(cols, r.size());
    for (const auto& r : b)
        cols = std::max(cols, r.size());
    auto echelon = [cols](RatMatrix m) {
        for (auto& row : m)
            row.resize(cols, Rat(0));
        int rk = rref(m);
        m.resize(static_cast<size_t>(rk));
        return m;
    };
    return echelon(a) == echelon(b);
}

} // namespace motivic
