#include "hamel/basis.hpp"

#include <map>

#include "hamel/linalg.hpp"

namespace hamel {

namespace {

// Incremental echelon form over sparse vectors, pivoted on the smallest
// Index of the running reduction. Insertion order is the scan order, which
// keeps Steinitz completion deterministic.
class SpanBuilder {
public:
    // Reduces v against the rows collected so far.
    FinSuppVec reduce(FinSuppVec v) const {
        for (const auto& [pivot, row] : rows_) {
            Scalar c = v.coeff(pivot);
            if (!c.is_zero()) v.add_scaled(-c, row);
        }
        return v;
    }

    // True (and absorbs v) iff v is independent of the current span.
    bool try_insert(const FinSuppVec& v) {
        FinSuppVec r = reduce(v);
        if (r.is_zero()) return false;
        const auto& [pivot, lead] = *r.entries().begin();
        rows_.emplace(pivot, lead.inverse() * r);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::map<Index, FinSuppVec> rows_;
};

} // namespace

FreenessCertificate is_free(const std::vector<FinSuppVec>& vs) {
    FreenessCertificate cert;
    if (vs.empty()) return cert;
    FieldTag field = vs.front().field();
    for (const auto& v : vs) require_same_field(field, v.field());

    auto rows = support_union(vs);
    Rref r = row_reduce(Matrix::from_columns(vs, rows));
    if (r.rank() == vs.size()) return cert;

    auto kernel = kernel_basis(r);
    cert.verdict = FreenessCertificate::Verdict::Dependent;
    cert.witness = kernel.front();
    return cert;
}

std::size_t rank(const std::vector<FinSuppVec>& vs) {
    if (vs.empty()) return 0;
    FieldTag field = vs.front().field();
    for (const auto& v : vs) require_same_field(field, v.field());
    SpanBuilder span;
    std::size_t n = 0;
    for (const auto& v : vs)
        if (span.try_insert(v)) ++n;
    return n;
}

std::vector<FinSuppVec> extend_to_basis(const std::vector<FinSuppVec>& E,
                                        const std::vector<FinSuppVec>& ambient) {
    auto cert = is_free(E);
    if (!cert.free()) throw NotFreeError(cert.witness);

    SpanBuilder span;
    std::vector<FinSuppVec> out;
    out.reserve(E.size());
    for (const auto& v : E) {
        span.try_insert(v);
        out.push_back(v);
    }
    for (const auto& v : ambient) {
        if (span.try_insert(v)) out.push_back(v);
    }
    return out;
}

std::vector<FinSuppVec> complement(const std::vector<FinSuppVec>& u_basis,
                                   const std::vector<FinSuppVec>& v_basis) {
    auto cert = is_free(u_basis);
    if (!cert.free()) throw NotFreeError(cert.witness);

    // Every u must be spanned by V.
    SpanBuilder v_span;
    for (const auto& v : v_basis) v_span.try_insert(v);
    for (const auto& u : u_basis) {
        if (!v_span.reduce(u).is_zero())
            throw NotSubspaceError("U is not contained in span(V)");
    }

    auto extended = extend_to_basis(u_basis, v_basis);
    return {extended.begin() + static_cast<std::ptrdiff_t>(u_basis.size()), extended.end()};
}

} // namespace hamel
