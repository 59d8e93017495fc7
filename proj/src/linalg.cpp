#include "hamel/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamel {

namespace {
std::atomic<ExecPolicy> g_policy{ExecPolicy::Auto};

// Below this many cells in the active block the parallel kernel falls back
// to serial row updates; thread startup would dominate.
constexpr std::size_t kParallelThreshold = 4096;
} // namespace

void set_default_exec_policy(ExecPolicy p) { g_policy.store(p); }
ExecPolicy default_exec_policy() { return g_policy.load(); }

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

std::vector<Index> support_union(const std::vector<FinSuppVec>& vs) {
    std::set<Index> keys;
    for (const auto& v : vs)
        for (const auto& [k, c] : v.entries()) keys.insert(k);
    return {keys.begin(), keys.end()};
}

Matrix Matrix::from_columns(const std::vector<FinSuppVec>& columns,
                            const std::vector<Index>& row_index) {
    FieldTag field = columns.empty() ? FieldTag::Q() : columns.front().field();
    for (const auto& c : columns) require_same_field(field, c.field());
    Matrix m(row_index.size(), columns.size(), field);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (const auto& [k, val] : columns[j].entries()) {
            auto it = std::lower_bound(row_index.begin(), row_index.end(), k);
            if (it == row_index.end() || !(*it == k))
                throw Error("row index does not cover column support");
            m.at(static_cast<std::size_t>(it - row_index.begin()), j) = val;
        }
    }
    return m;
}

namespace {

// One row update of Gauss-Jordan: row j -= factor * row r on columns >= c0.
// Zero entries of the pivot row are skipped, which keeps sparse systems
// cheap even in dense storage.
inline void eliminate_row(Matrix& m, std::size_t j, std::size_t r, std::size_t c,
                          std::size_t cols) {
    const Scalar factor = m.at(j, c);
    if (factor.is_zero()) return;
    for (std::size_t k = c; k < cols; ++k) {
        const Scalar& p = m.at(r, k);
        if (p.is_zero()) continue;
        m.at(j, k) = m.at(j, k) - factor * p;
    }
}

// Pivots are only sought in columns < pivot_limit; trailing columns (e.g. an
// augmented right-hand side) are carried along.
Rref reduce_impl(Matrix m, bool parallel, std::size_t pivot_limit) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::vector<std::optional<std::size_t>> row_of_col(cols);

    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        }
        if (pr == rows) continue;
        m.swap_rows(r, pr);

        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t k = c; k < cols; ++k) {
            if (!m.at(r, k).is_zero()) m.at(r, k) = inv * m.at(r, k);
        }

#ifdef _OPENMP
        if (parallel && rows * (cols - c) >= kParallelThreshold) {
            #pragma omp parallel for schedule(dynamic, 8)
            for (std::size_t j = 0; j < rows; ++j) {
                if (j != r) eliminate_row(m, j, r, c, cols);
            }
        } else
#else
        (void)parallel;
#endif
        {
            for (std::size_t j = 0; j < rows; ++j) {
                if (j != r) eliminate_row(m, j, r, c, cols);
            }
        }

        pivot_cols.push_back(c);
        row_of_col[c] = r;
        ++r;
    }
    return Rref{std::move(m), std::move(pivot_cols), std::move(row_of_col)};
}

} // namespace

Rref row_reduce_serial(Matrix m) {
    const std::size_t n = m.cols();
    return reduce_impl(std::move(m), false, n);
}
Rref row_reduce_parallel(Matrix m) {
    const std::size_t n = m.cols();
    return reduce_impl(std::move(m), true, n);
}

Rref row_reduce(Matrix m, ExecPolicy policy) {
    if (policy == ExecPolicy::Auto) policy = default_exec_policy();
    switch (policy) {
        case ExecPolicy::Serial: return row_reduce_serial(std::move(m));
        case ExecPolicy::Parallel: return row_reduce_parallel(std::move(m));
        case ExecPolicy::Auto: return row_reduce_parallel(std::move(m));
    }
    return row_reduce_serial(std::move(m));
}

std::vector<std::vector<Scalar>> kernel_basis(const Rref& r) {
    const std::size_t cols = r.m.cols();
    const FieldTag field = r.m.field();
    std::vector<std::vector<Scalar>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (r.row_of_col[f].has_value()) continue;
        std::vector<Scalar> v(cols, Scalar::zero(field));
        for (std::size_t c = 0; c < cols; ++c) {
            if (auto row = r.row_of_col[c]) v[c] = -r.m.at(*row, f);
        }
        v[f] = Scalar::one(field); // the free coordinate itself
        out.push_back(std::move(v));
    }
    return out;
}

LinearSolve solve_linear(const Matrix& a, const std::vector<Scalar>& b, ExecPolicy policy) {
    if (b.size() != a.rows()) throw Error("right-hand side size mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    if (policy == ExecPolicy::Auto) policy = default_exec_policy();
    Rref r = reduce_impl(std::move(aug), policy != ExecPolicy::Serial, a.cols());

    // Even when inconsistent, report the partial solution read off the pivot
    // rows; callers use it to form an exact residual.
    LinearSolve out;
    out.consistent = true;
    for (std::size_t i = r.rank(); i < a.rows(); ++i) {
        if (!r.m.at(i, a.cols()).is_zero()) { out.consistent = false; break; }
    }
    out.solution.assign(a.cols(), Scalar::zero(a.field()));
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (auto row = r.row_of_col[c]) out.solution[c] = r.m.at(*row, a.cols());
    }
    return out;
}

} // namespace hamel
