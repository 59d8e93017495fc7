#ifndef HAMEL_POLYNOMIAL_HPP
#define HAMEL_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "hamel/finsupp.hpp"
#include "hamel/index.hpp"
#include "hamel/scalar.hpp"

namespace hamel {

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// the frozen graded monomial order with no zero coefficients.
class Polynomial {
public:
    Polynomial(std::uint32_t dims, FieldTag field) : dims_(dims), field_(field) {}

    static Polynomial zero(std::uint32_t dims, FieldTag field) { return {dims, field}; }
    static Polynomial constant(std::uint32_t dims, const Scalar& c);
    static Polynomial monomial(std::uint32_t dims, const MultiIndex& m, const Scalar& c);

    std::uint32_t dims() const { return dims_; }
    const FieldTag& field() const { return field_; }

    using TermMap = std::map<MultiIndex, Scalar, bool (*)(const MultiIndex&, const MultiIndex&)>;
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::uint32_t degree() const; // 0 for the zero polynomial
    Scalar coeff(const MultiIndex& m) const;
    Polynomial& set(const MultiIndex& m, Scalar c);
    Polynomial& add_term(const MultiIndex& m, const Scalar& c);

    bool operator==(const Polynomial& o) const {
        return dims_ == o.dims_ && field_ == o.field_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& p);
    Polynomial operator-() const;

    /// Exact partial derivative d^alpha.
    Polynomial derivative(const MultiIndex& alpha) const;
    /// Substitution x -> x + h, expanded binomially.
    Polynomial shifted(const std::vector<Scalar>& h) const;
    Scalar eval(const std::vector<Scalar>& point) const;

    /// The same data as a finite-support vector over tuple indices.
    FinSuppVec to_finsupp() const;
    static Polynomial from_finsupp(std::uint32_t dims, const FinSuppVec& v);

    std::string str() const;

private:
    std::uint32_t dims_;
    FieldTag field_;
    TermMap terms_{&multi_less};
};

/// Falling factorial prod_i b_i (b_i - 1) ... (b_i - a_i + 1); zero when some
/// a_i > b_i. This is the coefficient in d^a x^b = fall(b,a) x^(b-a).
mpz_class falling_factorial(const MultiIndex& b, const MultiIndex& a);
/// Product of entrywise binomial coefficients C(b_i, a_i).
mpz_class multi_binomial(const MultiIndex& b, const MultiIndex& a);

} // namespace hamel

#endif
