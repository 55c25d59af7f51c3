#include "buzz/gf2.hpp"

namespace buzz::gf2 {

int rank(Matrix m) {
    int r = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && !m.get(piv, col)) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t w = 0; w < m.words; ++w)
            std::swap(m.bits[piv * m.words + w], m.bits[row * m.words + w]);
        for (std::size_t i = 0; i < m.rows; ++i)
            if (i != row && m.get(i, col)) m.xor_rows(i, row);
        ++row;
        ++r;
    }
    return r;
}

std::vector<std::vector<std::uint64_t>> kernel_basis(const Matrix& m) {
    // Row-reduce a copy, remember which column each pivot lands in, then read
    // one kernel vector off every free column.
    Matrix a = m;
    std::vector<std::size_t> pivot_col;  // per reduced row
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = row;
        while (piv < a.rows && !a.get(piv, col)) ++piv;
        if (piv == a.rows) continue;
        for (std::size_t w = 0; w < a.words; ++w)
            std::swap(a.bits[piv * a.words + w], a.bits[row * a.words + w]);
        for (std::size_t i = 0; i < a.rows; ++i)
            if (i != row && a.get(i, col)) a.xor_rows(i, row);
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    const std::size_t vec_words = (a.cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free_col = 0; free_col < a.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> v(vec_words, 0);
        v[free_col / 64] |= std::uint64_t(1) << (free_col % 64);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (a.get(i, free_col))
                v[pivot_col[i] / 64] |= std::uint64_t(1) << (pivot_col[i] % 64);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace buzz::gf2
