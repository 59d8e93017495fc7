#ifndef HAMEL_BASIS_HPP
#define HAMEL_BASIS_HPP

#include <vector>

#include "hamel/finsupp.hpp"

namespace hamel {

/// Outcome of a freeness check. A Dependent verdict carries a checked
/// witness: coefficients (one per input position, not all zero) whose
/// combination is exactly the zero vector.
struct FreenessCertificate {
    enum class Verdict { Free, Dependent };
    Verdict verdict = Verdict::Free;
    std::vector<Scalar> witness; // empty iff Free

    bool free() const { return verdict == Verdict::Free; }
};

class NotFreeError : public Error {
public:
    explicit NotFreeError(std::vector<Scalar> witness)
        : Error("vectors are not free"), witness(std::move(witness)) {}
    const char* kind() const override { return "not_free"; }
    std::vector<Scalar> witness;
};

FreenessCertificate is_free(const std::vector<FinSuppVec>& vs);

/// Rank of the family under exact row reduction.
std::size_t rank(const std::vector<FinSuppVec>& vs);

/// Deterministic Steinitz completion: returns a free family that starts with
/// E and spans span(ambient). Candidates are scanned in ambient list order
/// and kept iff they are still free against everything proved so far.
/// Throws NotFreeError when E itself is dependent.
std::vector<FinSuppVec> extend_to_basis(const std::vector<FinSuppVec>& E,
                                        const std::vector<FinSuppVec>& ambient);

/// A basis W with span(U) + span(W) = span(V) and the union free. Requires U
/// free (NotFreeError) and contained in span(V) (NotSubspaceError).
std::vector<FinSuppVec> complement(const std::vector<FinSuppVec>& u_basis,
                                   const std::vector<FinSuppVec>& v_basis);

} // namespace hamel

#endif
