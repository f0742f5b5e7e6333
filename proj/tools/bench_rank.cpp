#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "gsym/matrix.hpp"

using namespace gsym;
using clock_type = std::chrono::steady_clock;

namespace {

Mat random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
    std::uniform_int_distribution<int> d(-9, 9);
    Mat a(n, rank), b(rank, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank; ++j) a(i, j) = Rat(d(rng), 1 + (d(rng) & 3));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
    return a * b;
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = clock_type::now();
    f();
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank: serial rational elimination vs. parallel Bareiss"};
    std::size_t size = 120, rank = 80;
    int reps = 3;
    std::uint64_t seed = 1;
    app.add_option("--size", size, "matrix dimension");
    app.add_option("--rank", rank, "target rank of the random matrix");
    app.add_option("--reps", reps, "repetitions");
    app.add_option("--seed", seed, "PRNG seed");
    CLI11_PARSE(app, argc, argv);

    std::mt19937_64 rng(seed);
    Mat m = random_matrix(rng, size, std::min(rank, size));

    std::size_t r_serial = 0, r_parallel = 0;
    double best_serial = 1e300, best_parallel = 1e300;
    for (int i = 0; i < reps; ++i) {
        best_serial = std::min(best_serial, time_ms([&] { r_serial = rank_serial(m); }));
        best_parallel = std::min(best_parallel, time_ms([&] { r_parallel = rank_bareiss(m); }));
    }
    if (r_serial != r_parallel) {
        std::cerr << "rank mismatch: serial " << r_serial << " vs parallel " << r_parallel << "\n";
        return 1;
    }
    std::cout << "size " << size << "  rank " << r_serial << "\n"
              << "serial rational elimination: " << best_serial << " ms\n"
              << "parallel fraction-free Bareiss: " << best_parallel << " ms\n"
              << "speedup: " << best_serial / best_parallel << "x\n";
    return 0;
}
