// Times packed-word GF(2) rank on a random n x n matrix (default 4096).
// Usage: bench_rank [n] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "locinv/experiments.hpp"
#include "locinv/mat.hpp"

int main(int argc, char** argv) {
    size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4096;
    uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;
    if (n == 0 || n > 65536) {
        std::fprintf(stderr, "n must lie in [1, 65536]\n");
        return 1;
    }

    locinv::Mat a(locinv::Field::gf2(), n, n);
    size_t stride = a.word_stride();
    uint64_t state = seed;
    uint64_t tail_mask = (n % 64) ? ((uint64_t{1} << (n % 64)) - 1) : ~uint64_t{0};
    for (size_t r = 0; r < n; ++r) {
        uint64_t* row = a.row_words(r);
        for (size_t w = 0; w < stride; ++w) row[w] = locinv::splitmix64(state);
        row[stride - 1] &= tail_mask;
    }

    auto t0 = std::chrono::steady_clock::now();
    size_t rank = locinv::mat_rank(a);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::printf("n %zu\nrank %zu\nelapsed_ms %.1f\n", n, rank, ms);
    return 0;
}
