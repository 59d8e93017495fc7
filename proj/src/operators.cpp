#include "hamel/operators.hpp"

#include <algorithm>

#include "hamel/linalg.hpp"

namespace hamel {

ColumnFiniteOperator::ColumnFiniteOperator(std::uint32_t dims, int degree_shift,
                                           std::map<MultiIndex, FinSuppVec> columns, Fill fill,
                                           FieldTag field)
    : dims_(dims), degree_shift_(degree_shift), field_(field), fill_(fill) {
    // store all keys at exactly `dims` entries so lookups are width-agnostic
    for (auto& [beta, col] : columns) {
        require_same_field(field_, col.field());
        MultiIndex b = beta;
        for (std::size_t i = dims_; i < b.size(); ++i)
            if (b[i] != 0) throw Error("column index outside the declared variables");
        b.resize(dims_, 0);
        columns_.insert_or_assign(std::move(b), std::move(col));
    }
}

ColumnFiniteOperator ColumnFiniteOperator::from_generator(
    std::uint32_t dims, int degree_shift, std::function<FinSuppVec(const MultiIndex&)> gen,
    FieldTag field) {
    ColumnFiniteOperator op(dims, degree_shift, {}, Fill::Zero, field);
    op.gen_ = std::move(gen);
    return op;
}

ColumnFiniteOperator ColumnFiniteOperator::identity(std::uint32_t dims, FieldTag field) {
    return ColumnFiniteOperator(dims, 0, {}, Fill::Identity, field);
}

FinSuppVec ColumnFiniteOperator::column(const MultiIndex& beta) const {
    MultiIndex b = beta;
    for (std::size_t i = dims_; i < b.size(); ++i)
        if (b[i] != 0) throw Error("column index outside the declared variables");
    b.resize(dims_, 0);
    FinSuppVec col = FinSuppVec::zero(field_);
    if (gen_) {
        col = gen_(b);
    } else if (auto it = columns_.find(b); it != columns_.end()) {
        col = it->second;
    } else if (fill_ == Fill::Identity) {
        col = basis_vector(b, field_);
    }
    // Lazy certification of the degree-shift bound.
    long bound = static_cast<long>(total_degree(beta)) + degree_shift_;
    for (const auto& [k, c] : col.entries()) {
        if (!k.is_tuple()) throw Error("operator columns must be supported on tuple indices");
        if (static_cast<long>(total_degree(k.tuple_value())) > bound)
            throw DegreeBoundViolatedError(
                "column " + multi_str(beta) + " reaches degree " +
                std::to_string(total_degree(k.tuple_value())) + " past the declared shift bound " +
                std::to_string(degree_shift_));
    }
    return col;
}

std::uint32_t ColumnFiniteOperator::certify_up_to(std::uint32_t n) const {
    for (const auto& beta : monomials_up_to(dims_, n)) column(beta);
    return n;
}

FinSuppVec apply(const ColumnFiniteOperator& op, const FinSuppVec& v) {
    require_same_field(op.field(), v.field());
    FinSuppVec out(op.field());
    for (const auto& [k, c] : v.entries()) {
        if (!k.is_tuple()) throw Error("operator application needs tuple indices");
        out.add_scaled(c, op.column(k.tuple_value()));
    }
    return out;
}

Functional dual_apply(const ColumnFiniteOperator& op, const Functional& t) {
    require_same_field(op.field(), t.field());
    if (t.unbounded())
        throw Error("dual_apply needs a finite horizon; truncate the functional first");
    std::uint32_t shift_up = static_cast<std::uint32_t>(std::max(op.degree_shift(), 0));
    if (t.horizon() < shift_up) throw HorizonExceededError(shift_up, t.horizon());
    std::uint32_t out_h = t.horizon() - shift_up;

    Functional out(op.dims(), out_h, op.field());
    for (const auto& beta : monomials_up_to(op.dims(), out_h))
        out.set(beta, eval_bracket(t, op.column(beta)));
    out.rename("dual_apply");
    return out;
}

namespace {

// The level-wise linear system for Lambda o O = T on degrees <= eq_degree:
// one equation per monomial beta, unknowns are the moments of Lambda at the
// monomials appearing in the columns, processed in the frozen graded order.
struct DualSystem {
    std::vector<MultiIndex> unknowns; // sorted by multi_less
    Matrix mat;                       // rows: equations, cols: unknowns
    std::vector<Scalar> rhs;
};

DualSystem build_dual_system(const ColumnFiniteOperator& op, const Functional& t,
                             std::uint32_t eq_degree, std::uint32_t unknown_degree) {
    auto betas = monomials_up_to(op.dims(), eq_degree);
    std::vector<FinSuppVec> cols;
    cols.reserve(betas.size());
    for (const auto& beta : betas) cols.push_back(op.column(beta));

    std::vector<MultiIndex> unknowns = monomials_up_to(op.dims(), unknown_degree);
    std::map<MultiIndex, std::size_t, bool (*)(const MultiIndex&, const MultiIndex&)> pos(
        &multi_less);
    for (std::size_t i = 0; i < unknowns.size(); ++i) pos.emplace(unknowns[i], i);

    DualSystem sys{std::move(unknowns), Matrix(betas.size(), pos.size(), op.field()), {}};
    for (std::size_t r = 0; r < betas.size(); ++r) {
        for (const auto& [k, c] : cols[r].entries()) {
            auto it = pos.find(k.tuple_value());
            if (it == pos.end())
                throw Error("column support escapes the unknown window"); // shift bound says no
            sys.mat.at(r, it->second) = c;
        }
        sys.rhs.push_back(t.moment(betas[r]));
    }
    return sys;
}

} // namespace

namespace detail {

DualSolveOutcome solve_dual_unchecked(const ColumnFiniteOperator& op, const Functional& t,
                                      std::uint32_t n) {
    require_same_field(op.field(), t.field());
    if (!t.unbounded() && t.horizon() < n) throw HorizonExceededError(n, t.horizon());

    std::uint32_t shift_up = static_cast<std::uint32_t>(std::max(op.degree_shift(), 0));
    std::uint32_t eq_degree = n - std::min(n, shift_up);
    std::uint32_t unknown_degree = n; // eq_degree + shift_up <= n covers all column supports

    DualSystem sys = build_dual_system(op, t, eq_degree, unknown_degree);
    auto solved = solve_linear(sys.mat, sys.rhs);

    DualSolveOutcome out{solved.consistent, Functional(op.dims(), n, op.field())};
    if (!solved.consistent) return out;
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        out.solution.set(sys.unknowns[i], solved.solution[i]);
    out.solution.rename("solve_dual");
    return out;
}

} // namespace detail

InjectivityCertificate injectivity_probe(const ColumnFiniteOperator& op, std::uint32_t n) {
    auto betas = monomials_up_to(op.dims(), n);
    std::vector<FinSuppVec> cols;
    cols.reserve(betas.size());
    for (const auto& beta : betas) cols.push_back(op.column(beta));

    auto rows = support_union(cols);
    Rref r = row_reduce(Matrix::from_columns(cols, rows));
    if (r.rank() == cols.size()) return InjectivityCertificate::injective_up_to(n);

    auto kernel = kernel_basis(r);
    // Free columns are in monomial order; prefer the first positive-degree
    // witness, falling back to the constant one.
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (!r.row_of_col[c].has_value()) free_cols.push_back(c);
    std::size_t pick = 0;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        if (total_degree(betas[free_cols[i]]) > 0) { pick = i; break; }
    }

    FinSuppVec witness(op.field());
    for (std::size_t c = 0; c < cols.size(); ++c) witness.set(Index::tuple(betas[c]), kernel[pick][c]);
    return InjectivityCertificate{false, n, std::move(witness)};
}

Functional solve_dual(const ColumnFiniteOperator& op, const Functional& t, std::uint32_t n) {
    auto cert = injectivity_probe(op, n);
    if (!cert.injective) {
        // Exhibit a right-hand side that the dual equation cannot reach: any
        // T with <T, v> != 0 for the kernel witness v. The indicator of the
        // first spectrum index does.
        const auto& v = cert.witness;
        Functional bad(op.dims(), n, op.field());
        const Index& s = v.entries().begin()->first;
        bad.set(s.tuple_value(), Scalar::one(op.field()));
        bad.rename("inconsistency_witness");
        throw NotInjectiveError(v, std::move(bad));
    }
    auto outcome = detail::solve_dual_unchecked(op, t, n);
    if (!outcome.consistent)
        throw InconsistentSystemError(
            "dual system inconsistent despite certified injectivity"); // never under the precondition
    return std::move(outcome.solution);
}

} // namespace hamel
