#ifndef GSYM_MATRIX_HPP
#define GSYM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "gsym/rational.hpp"

namespace gsym {

// Dense exact-rational matrix. Row-major, minimal surface: just what the
// grading/cohomology code needs.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const = default;

    bool is_symmetric() const;
    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    bool is_zero() const;

    // Exact determinant (square only), by rational elimination.
    Rat det() const;
    // Exact inverse; throws error on singular input.
    Mat inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Reference rank: plain Gaussian elimination over Rat, serial.
std::size_t rank_serial(Mat m);

// Fraction-free (Bareiss) rank over cleared-denominator integers; the
// elimination row updates are OpenMP-parallel. Must agree with rank_serial.
std::size_t rank_bareiss(const Mat& m);

} // namespace gsym

#endif
