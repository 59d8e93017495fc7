#ifndef HAMEL_LINALG_HPP
#define HAMEL_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hamel/finsupp.hpp"
#include "hamel/scalar.hpp"

namespace hamel {

/// Which elimination kernel to run. Serial is the reference implementation;
/// Parallel distributes row updates over OpenMP threads and produces
/// bit-identical results (exact arithmetic, row updates independent).
/// Auto picks Parallel for matrices past a size threshold when OpenMP is
/// compiled in.
enum class ExecPolicy { Serial, Parallel, Auto };

void set_default_exec_policy(ExecPolicy p);
ExecPolicy default_exec_policy();

/// Dense matrix of exact scalars over one field.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, FieldTag field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldTag& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t i, std::size_t j);

    /// Columns are the given vectors expressed over `row_index` (the sorted
    /// union of their supports unless provided).
    static Matrix from_columns(const std::vector<FinSuppVec>& columns,
                               const std::vector<Index>& row_index);

private:
    std::size_t rows_, cols_;
    FieldTag field_;
    std::vector<Scalar> a_;
};

/// Sorted union of the supports of the given vectors.
std::vector<Index> support_union(const std::vector<FinSuppVec>& vs);

/// Reduced row echelon form. Pivots are chosen deterministically: columns
/// are swept left to right, the first row (top to bottom) with a nonzero
/// entry becomes the pivot row. Exact arithmetic makes pivot magnitude
/// irrelevant.
struct Rref {
    Matrix m;
    std::vector<std::size_t> pivot_cols;                  // ascending
    std::vector<std::optional<std::size_t>> row_of_col;   // pivot row per column
    std::size_t rank() const { return pivot_cols.size(); }
};

Rref row_reduce(Matrix m, ExecPolicy policy = ExecPolicy::Auto);
Rref row_reduce_serial(Matrix m);
Rref row_reduce_parallel(Matrix m);

/// Kernel basis of the matrix whose rref is given, one vector per free
/// column, each normalized to 1 at its free coordinate, in free-column
/// order.
std::vector<std::vector<Scalar>> kernel_basis(const Rref& r);

struct LinearSolve {
    bool consistent = false;
    std::vector<Scalar> solution; // free coordinates fixed to zero
};

/// Solves A x = b exactly; free coordinates are set to zero, which makes the
/// solution canonical.
LinearSolve solve_linear(const Matrix& a, const std::vector<Scalar>& b,
                         ExecPolicy policy = ExecPolicy::Auto);

} // namespace hamel

#endif
