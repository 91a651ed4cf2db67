#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matrix.hpp"

namespace rickart {

// All p^(rows*cols) matrices over F_p, lexicographic in row-major entry
// order (last entry varies fastest).
inline std::vector<Matrix> enumerateMatrices(const FieldDescriptor& f, std::size_t rows,
                                             std::size_t cols) {
    if (f.kind != FieldDescriptor::Kind::PrimeField)
        throw NotEnumerable("only prime-field matrix spaces are enumerable");
    std::vector<Matrix> out;
    std::size_t n = rows * cols;
    std::vector<std::int64_t> digits(n, 0);
    for (;;) {
        Matrix m(rows, cols, f);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar(FpElement{digits[i * cols + j], f.p});
        out.push_back(std::move(m));
        std::size_t k = n;
        while (k > 0) {
            if (++digits[k - 1] < f.p) break;
            digits[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

// Deterministic draw: the stream depends only on (seed, index), so sweeps
// can be partitioned across workers without changing results.
inline Matrix sampleQiMatrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                             std::uint64_t index, std::int64_t entryBound) {
    std::mt19937_64 rng(detail::splitmix64(seed) ^ detail::splitmix64(index + 1));
    std::uniform_int_distribution<std::int64_t> num(-entryBound, entryBound);
    std::uniform_int_distribution<std::int64_t> den(1, entryBound);
    Matrix m(rows, cols, FieldDescriptor::qi());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rational re(num(rng), den(rng));
            Rational im(num(rng), den(rng));
            m.at(i, j) = Scalar(GaussianRational{re, im});
        }
    return m;
}

inline Matrix sampleFpMatrix(const FieldDescriptor& f, std::size_t rows, std::size_t cols,
                             std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(detail::splitmix64(seed) ^ detail::splitmix64(index + 1));
    std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(FpElement{d(rng), f.p});
    return m;
}

} // namespace rickart
