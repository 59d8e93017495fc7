#ifndef HAMEL_OPERATORS_HPP
#define HAMEL_OPERATORS_HPP

#include <functional>
#include <map>

#include "hamel/finsupp.hpp"
#include "hamel/functional.hpp"
#include "hamel/index.hpp"

namespace hamel {

/// A linear operator on the graded polynomial model given column by column:
/// column(beta) is the image of the basis monomial x^beta, always of finite
/// support. A degree-shift bound s promises deg(column(beta)) <= |beta| + s;
/// it is what makes level-wise solving valid, and every column access checks
/// it (DegreeBoundViolatedError on violation). Columns come from an explicit
/// sparse table with a declared fill rule for unlisted entries, or from a
/// generator closure. Operators are immutable and safe to share across
/// threads.
class ColumnFiniteOperator {
public:
    enum class Fill { Identity, Zero };

    ColumnFiniteOperator(std::uint32_t dims, int degree_shift,
                         std::map<MultiIndex, FinSuppVec> columns, Fill fill, FieldTag field);

    static ColumnFiniteOperator from_generator(std::uint32_t dims, int degree_shift,
                                               std::function<FinSuppVec(const MultiIndex&)> gen,
                                               FieldTag field);

    static ColumnFiniteOperator identity(std::uint32_t dims, FieldTag field);

    std::uint32_t dims() const { return dims_; }
    int degree_shift() const { return degree_shift_; }
    const FieldTag& field() const { return field_; }
    bool generator_backed() const { return static_cast<bool>(gen_); }
    const std::map<MultiIndex, FinSuppVec>& explicit_columns() const { return columns_; }
    Fill fill() const { return fill_; }

    /// Image of the basis monomial x^beta.
    FinSuppVec column(const MultiIndex& beta) const;

    /// Eagerly checks the shift bound on every column of total degree <= n
    /// and returns n: the degree up to which the bound is now certified.
    /// Columns past n are still checked lazily on access.
    std::uint32_t certify_up_to(std::uint32_t n) const;

private:
    std::uint32_t dims_;
    int degree_shift_;
    FieldTag field_;
    std::map<MultiIndex, FinSuppVec> columns_;
    Fill fill_ = Fill::Identity;
    std::function<FinSuppVec(const MultiIndex&)> gen_;
};

/// O(v) = sum v(beta) column(beta), exact.
FinSuppVec apply(const ColumnFiniteOperator& op, const FinSuppVec& v);

/// O*(T) = T o O: moment beta of the image is <T, column(beta)>. The output
/// horizon is T.horizon - max(shift, 0); T must have a finite horizon
/// (truncate an unbounded functional first).
Functional dual_apply(const ColumnFiniteOperator& op, const Functional& t);

/// Result of the truncation-relative injectivity check. A KernelWitness
/// carries a nonzero v with O(v) = 0 exactly.
struct InjectivityCertificate {
    bool injective = true;
    std::uint32_t checked_up_to = 0;
    FinSuppVec witness = FinSuppVec::zero(FieldTag::Q()); // meaningful iff !injective

    static InjectivityCertificate injective_up_to(std::uint32_t n) {
        return {true, n, FinSuppVec::zero(FieldTag::Q())};
    }
};

/// Exact kernel computation of O restricted to total degrees <= N. When the
/// kernel is nontrivial the witness returned is the reduced kernel vector of
/// the first positive-degree free coordinate when one exists (a constant
/// kernel vector is reported only when it is all there is); tests and the
/// regularity reports rely on this choice being deterministic.
InjectivityCertificate injectivity_probe(const ColumnFiniteOperator& op, std::uint32_t n);

class NotInjectiveError : public Error {
public:
    NotInjectiveError(FinSuppVec witness, Functional inconsistent_rhs)
        : Error("operator is not injective on the truncation; the dual equation is unsolvable"),
          witness(std::move(witness)), inconsistent_rhs(std::move(inconsistent_rhs)) {}
    const char* kind() const override { return "not_injective"; }
    FinSuppVec witness;
    /// A functional T with <T, witness> != 0: the level-wise system
    /// Lambda o O = T is inconsistent for it, exhibiting the failure of the
    /// surjectivity direction.
    Functional inconsistent_rhs;
};

/// Solves Lambda o O = T on all degrees <= N - max(shift, 0): the returned
/// Lambda has horizon N and satisfies <dual_apply(O, Lambda) - T, e_beta> = 0
/// exactly for every |beta| <= N - max(shift, 0). Free coordinates (a
/// complement of the range, found deterministically in the frozen monomial
/// order) are extended by zero, so identical inputs give identical outputs.
/// Preconditions: injectivity_probe(op, N) is injective (else
/// NotInjectiveError) and T.horizon >= N.
Functional solve_dual(const ColumnFiniteOperator& op, const Functional& t, std::uint32_t n);

namespace detail {
struct DualSolveOutcome {
    bool consistent = false;
    Functional solution;
};
/// The raw level-wise solve without the injectivity precondition; used to
/// exhibit inconsistency in the converse direction.
DualSolveOutcome solve_dual_unchecked(const ColumnFiniteOperator& op, const Functional& t,
                                      std::uint32_t n);
} // namespace detail

} // namespace hamel

#endif
