#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsym/matrix.hpp"

using namespace gsym;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int target_rank) {
    // product of rows x r and r x cols small-integer factors
    std::uniform_int_distribution<int> d(-4, 4);
    Mat a(rows, static_cast<std::size_t>(target_rank)), b(static_cast<std::size_t>(target_rank), cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(target_rank); ++j) a(i, j) = d(rng);
    for (std::size_t i = 0; i < static_cast<std::size_t>(target_rank); ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = Rat(d(rng), 3);
    return a * b;
}

} // namespace

TEST_CASE("det and inverse") {
    Mat m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    CHECK(m.det() == 1);
    CHECK(m.inverse() * m == Mat::identity(2));

    Mat s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = 1;
    CHECK(s.det() == -1);
    CHECK(s.inverse() == s);

    Mat z(2, 2);
    CHECK(z.det() == 0);
    CHECK_THROWS_AS(z.inverse(), error&);
}

TEST_CASE("ranks: golden") {
    Mat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rat(static_cast<int>(i + j));
    CHECK(rank_serial(m) == 2);
    CHECK(rank_bareiss(m) == 2);
    CHECK(rank_serial(Mat(0, 5)) == 0);
    CHECK(rank_bareiss(Mat(4, 0)) == 0);
    CHECK(rank_bareiss(Mat::identity(6)) == 6);
}

TEST_CASE("bareiss agrees with serial reference on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng() % 10);
        std::size_t cols = 1 + static_cast<std::size_t>(rng() % 10);
        int r = 1 + static_cast<int>(rng() % std::min(rows, cols));
        Mat m = random_matrix(rng, rows, cols, r);
        std::size_t rs = rank_serial(m);
        CHECK(rs == rank_bareiss(m));
        CHECK(rs <= static_cast<std::size_t>(r));
    }
}
