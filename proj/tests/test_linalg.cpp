#include <doctest.h>

#include "hamel/basis.hpp"
#include "hamel/linalg.hpp"
#include "test_util.hpp"

using namespace hamel;

namespace {
Matrix random_matrix(testutil::Rng& rng, const FieldTag& field, std::size_t rows,
                     std::size_t cols, int sparsity_pct = 70) {
    Matrix m(rows, cols, field);
    std::uniform_int_distribution<int> pct(0, 99);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (pct(rng) < sparsity_pct) m.at(i, j) = testutil::random_scalar(rng, field);
    return m;
}

bool same_rref(const Rref& a, const Rref& b) {
    if (a.pivot_cols != b.pivot_cols) return false;
    if (a.m.rows() != b.m.rows() || a.m.cols() != b.m.cols()) return false;
    for (std::size_t i = 0; i < a.m.rows(); ++i)
        for (std::size_t j = 0; j < a.m.cols(); ++j)
            if (!(a.m.at(i, j) == b.m.at(i, j))) return false;
    return true;
}
} // namespace

TEST_CASE("parallel_elimination_matches_serial_reference_bit_for_bit") {
    testutil::Rng rng(2024);
    for (FieldTag field : {FieldTag::Q(), FieldTag::Qi(), FieldTag::GF(10007)}) {
        for (int t = 0; t < 6; ++t) {
            Matrix m = random_matrix(rng, field, 24, 19);
            Rref serial = row_reduce_serial(m);
            Rref parallel = row_reduce_parallel(m);
            CHECK(same_rref(serial, parallel));
        }
    }
    // large enough to cross the parallel threshold
    Matrix big = random_matrix(rng, FieldTag::GF(10007), 80, 70);
    CHECK(same_rref(row_reduce_serial(big), row_reduce_parallel(big)));
}

TEST_CASE("rank_agrees_with_minor_expansion_oracle") {
    testutil::Rng rng(5150);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, FieldTag::Q(), 5, 3, 60);
        CHECK(row_reduce(m).rank() == testutil::minor_rank_oracle(m));
    }
}

TEST_CASE("kernel_vectors_annihilate") {
    testutil::Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, FieldTag::Q(), 4, 6, 60);
        Rref r = row_reduce(m);
        auto kernel = kernel_basis(r);
        CHECK(kernel.size() == m.cols() - r.rank());
        for (const auto& v : kernel) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Scalar acc = Scalar::zero(FieldTag::Q());
                for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("solve_linear_finds_exact_solutions_with_zero_free_part") {
    testutil::Rng rng(99);
    for (int t = 0; t < 30; ++t) {
        Matrix m = random_matrix(rng, FieldTag::Q(), 5, 7, 60);
        // choose x, form b = m x, solve and verify
        std::vector<Scalar> x;
        for (std::size_t j = 0; j < 7; ++j) x.push_back(testutil::random_scalar(rng, FieldTag::Q()));
        std::vector<Scalar> b(5, Scalar::zero(FieldTag::Q()));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j) b[i] += m.at(i, j) * x[j];
        auto s = solve_linear(m, b);
        REQUIRE(s.consistent);
        for (std::size_t i = 0; i < 5; ++i) {
            Scalar acc = Scalar::zero(FieldTag::Q());
            for (std::size_t j = 0; j < 7; ++j) acc += m.at(i, j) * s.solution[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("solve_linear_reports_inconsistency") {
    Matrix m(2, 1, FieldTag::Q());
    m.at(0, 0) = Scalar::one(FieldTag::Q());
    // rows: x = 1, 0 = 1
    std::vector<Scalar> b{Scalar::one(FieldTag::Q()), Scalar::one(FieldTag::Q())};
    auto s = solve_linear(m, b);
    CHECK_FALSE(s.consistent);
}
