#pragma once

#include <cstdint>
#include <vector>

namespace buzz::gf2 {

/// Dense Z/2 matrix with 64-bit packed rows. Small-scale utility for the
/// homology-level linear algebra in the zigzag engine (dimensions here are
/// Betti numbers, not simplex counts).
struct Matrix {
    std::size_t rows = 0, cols = 0, words = 0;
    std::vector<std::uint64_t> bits;  // rows * words

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), words((c + 63) / 64), bits(r * words, 0) {}

    bool get(std::size_t i, std::size_t j) const {
        return (bits[i * words + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) { bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64); }
    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] ^= bits[src * words + w];
    }
    bool row_empty(std::size_t i) const {
        for (std::size_t w = 0; w < words; ++w)
            if (bits[i * words + w]) return false;
        return true;
    }
};

/// Rank by Gaussian elimination (operates on a copy).
int rank(Matrix m);

/// Basis of {x : m x = 0} where x ranges over bit vectors of length m.cols.
/// Each kernel vector is returned as a packed row of (cols+63)/64 words.
std::vector<std::vector<std::uint64_t>> kernel_basis(const Matrix& m);

}  // namespace buzz::gf2
