#ifndef HAMEL_FINSUPP_HPP
#define HAMEL_FINSUPP_HPP

#include <map>
#include <utility>
#include <vector>

#include "hamel/index.hpp"
#include "hamel/scalar.hpp"

namespace hamel {

/// A finitely supported map Index -> Scalar over one field. Canonical form:
/// zero coefficients are never stored, so two vectors are equal iff their
/// entry maps are equal. Values are immutable in spirit; every operation
/// returns a fresh vector.
class FinSuppVec {
public:
    explicit FinSuppVec(FieldTag field) : field_(field) {}

    static FinSuppVec zero(FieldTag field) { return FinSuppVec(field); }

    const FieldTag& field() const { return field_; }
    const std::map<Index, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    /// Coefficient at s; exact zero when absent.
    Scalar coeff(const Index& s) const;

    /// Sets a coefficient, erasing the entry when the value is zero.
    FinSuppVec& set(const Index& s, Scalar value);
    /// In-place fused *this += c * v.
    FinSuppVec& add_scaled(const Scalar& c, const FinSuppVec& v);

    /// Largest total degree over tuple indices in the support (0 if none).
    std::uint32_t max_tuple_degree() const;

    bool operator==(const FinSuppVec& o) const {
        return field_ == o.field_ && entries_ == o.entries_;
    }

    friend FinSuppVec operator+(const FinSuppVec& a, const FinSuppVec& b);
    friend FinSuppVec operator-(const FinSuppVec& a, const FinSuppVec& b);
    friend FinSuppVec operator*(const Scalar& c, const FinSuppVec& v);
    FinSuppVec operator-() const;

    std::string str() const;

private:
    FieldTag field_;
    std::map<Index, Scalar> entries_;
};

/// e_s: the standard basis vector with single entry s -> 1.
FinSuppVec basis_vector(const Index& s, const FieldTag& field);
FinSuppVec basis_vector(const MultiIndex& m, const FieldTag& field);

/// Exact sum of c_i * v_i. All vectors must share one field tag
/// (MixedFieldsError otherwise). The empty combination is the zero vector
/// over Q.
FinSuppVec linear_combine(const std::vector<std::pair<Scalar, FinSuppVec>>& terms);

/// The support of v, sorted by the frozen Index order; empty for v = 0.
std::vector<Index> spectrum(const FinSuppVec& v);

/// Orthonormal-Hamel inner product: sum of conj(a_s) * b_s over the common
/// spectrum. Conjugation acts on the first argument; it is the identity on Q
/// and GF(p).
Scalar inner_product(const FinSuppVec& v, const FinSuppVec& w);

class NotInSpanError : public Error {
public:
    explicit NotInSpanError(FinSuppVec residual)
        : Error("vector does not lie in the span of the given basis"),
          residual(std::move(residual)) {}
    const char* kind() const override { return "not_in_span"; }
    FinSuppVec residual;
};

/// Coordinates of v relative to a labeled free family: returns f with
/// v = sum f(label) * basis_vector. Throws NotInSpanError (with the exact
/// residual) when v is outside the span, and NotFreeError (from the basis
/// module) when the family is dependent.
FinSuppVec coordinate_iso(const FinSuppVec& v,
                          const std::vector<std::pair<Index, FinSuppVec>>& basis);

} // namespace hamel

#endif
