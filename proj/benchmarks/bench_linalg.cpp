// Compares the serial reference elimination against the OpenMP kernel on
// random exact matrices and checks that both produce identical results.
//
//   hamel_bench [max_dim]
//
// Rational entries make the row updates gcd-heavy (good scaling); prime
// field entries are cheap per cell (parallel overhead visible).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hamel/linalg.hpp"

using namespace hamel;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const FieldTag& field, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (field.kind == FieldKind::PrimeField) {
                std::uniform_int_distribution<std::uint64_t> r(0, field.modulus - 1);
                m.at(i, j) = Scalar::residue(r(rng), field.modulus);
            } else {
                m.at(i, j) = Scalar::rational(mpq_class(num(rng), den(rng)));
            }
        }
    }
    return m;
}

bool same(const Rref& a, const Rref& b) {
    if (a.pivot_cols != b.pivot_cols) return false;
    for (std::size_t i = 0; i < a.m.rows(); ++i)
        for (std::size_t j = 0; j < a.m.cols(); ++j)
            if (!(a.m.at(i, j) == b.m.at(i, j))) return false;
    return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_field(const char* label, const FieldTag& field, std::size_t max_dim) {
    std::printf("%s\n", label);
    std::printf("  %6s  %10s  %10s  %8s\n", "n", "serial s", "openmp s", "speedup");
    for (std::size_t n = 48; n <= max_dim; n += n / 2) {
        std::mt19937_64 rng(n);
        Matrix m = random_matrix(rng, field, n);

        auto t0 = std::chrono::steady_clock::now();
        Rref serial = row_reduce_serial(m);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        Rref parallel = row_reduce_parallel(m);
        double tp = seconds_since(t0);

        if (!same(serial, parallel)) {
            std::printf("  MISMATCH at n=%zu\n", n);
            std::exit(1);
        }
        std::printf("  %6zu  %10.4f  %10.4f  %7.2fx\n", n, ts, tp, ts / tp);
    }
}

} // namespace

int main(int argc, char** argv) {
    std::size_t max_dim = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 160;
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in (both kernels run serially)\n");
#endif
    bench_field("rationals (gcd-heavy entries)", FieldTag::Q(), max_dim);
    bench_field("GF(1000003) (cheap entries)", FieldTag::GF(1000003), max_dim);
    std::printf("results identical across kernels\n");
    return 0;
}
