#ifndef HAMEL_DIFFOP_HPP
#define HAMEL_DIFFOP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamel/functional.hpp"
#include "hamel/operators.hpp"
#include "hamel/polynomial.hpp"

namespace hamel {

/// One normally ordered Weyl word x^coeff_deg d^deriv.
struct WeylKey {
    MultiIndex coeff_deg; // gamma: exponents of the polynomial coefficient
    MultiIndex deriv;     // alpha: orders of the partial derivatives

    bool operator==(const WeylKey&) const = default;
};

struct WeylKeyLess {
    bool operator()(const WeylKey& a, const WeylKey& b) const {
        if (!(a.deriv == b.deriv)) return multi_less(a.deriv, b.deriv);
        return multi_less(a.coeff_deg, b.coeff_deg);
    }
};

/// A linear differential operator with polynomial coefficients in normal form
/// (all coordinates to the left of all derivatives): sum c x^gamma d^alpha.
/// The normal form is unique, so equal operators have identical term maps.
/// Products are normally ordered with the commutation d_j x_k = x_k d_j +
/// delta_jk, applied exhaustively.
class DiffOp {
public:
    using TermMap = std::map<WeylKey, Scalar, WeylKeyLess>;

    DiffOp(std::uint32_t dims, FieldTag field) : dims_(dims), field_(field) {}

    static DiffOp zero(std::uint32_t dims, FieldTag field) { return {dims, field}; }
    static DiffOp constant(std::uint32_t dims, const Scalar& c);
    /// x_i (1-based).
    static DiffOp coordinate(std::uint32_t dims, FieldTag field, std::uint32_t i);
    /// d/dx_i (1-based).
    static DiffOp partial(std::uint32_t dims, FieldTag field, std::uint32_t i);
    static DiffOp term(std::uint32_t dims, const Scalar& c, MultiIndex gamma, MultiIndex alpha);

    std::uint32_t dims() const { return dims_; }
    const FieldTag& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest |alpha| over the terms.
    std::uint32_t order() const;
    /// Largest |gamma| over the terms.
    std::uint32_t coeff_degree() const;
    /// max(|gamma| - |alpha|): bound on how much one application can raise
    /// the degree of a polynomial.
    int degree_shift() const;

    DiffOp& add_term(MultiIndex gamma, MultiIndex alpha, const Scalar& c);

    bool operator==(const DiffOp& o) const {
        return dims_ == o.dims_ && field_ == o.field_ &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end());
    }

    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    /// Weyl product, normally ordered.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator*(const Scalar& c, const DiffOp& p);
    DiffOp operator-() const;
    DiffOp pow(std::uint32_t e) const;

    std::string str() const;

private:
    std::uint32_t dims_;
    FieldTag field_;
    TermMap terms_;
};

/// Parses the operator grammar:
///   expr     := ('-')? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | 'i' | var | deriv | '(' expr ')' | factor '^' nat
///   var      := 'x' nat | 'x' | 'y' | 'z'
///   deriv    := 'd' nat | 'd' var
///   rational := int ('/' posint)?
/// x/y/z alias x1/x2/x3; d1 is d/dx1. When dims is omitted it is inferred
/// from the largest variable index used (at least 1). The field defaults to
/// Q, promoted to Qi when the literal 'i' occurs.
DiffOp parse_diffop(const std::string& text, std::optional<std::uint32_t> dims = std::nullopt,
                    std::optional<FieldTag> field = std::nullopt);

/// The formal transpose: sum (-1)^|alpha| d^alpha (c_alpha(x) . ), expanded
/// to normal form by the Leibniz rule. An involution.
DiffOp transpose(const DiffOp& p);

/// Classical action on a polynomial, exact.
Polynomial apply_poly(const DiffOp& p, const Polynomial& f);

/// The operator as columns on the monomial basis: column(beta) =
/// apply_poly(p, x^beta), with degree shift max(|gamma| - |alpha|).
ColumnFiniteOperator as_operator_on_polys(const DiffOp& p);

/// P*(x,d) acting on a moment functional via the module structure: each term
/// c x^gamma d^alpha contributes c x^gamma (d^alpha T). Agrees with
/// dual_apply(as_operator_on_polys(transpose(p_star)), T) on the common
/// horizon.
Functional dual_action(const DiffOp& p_star, const Functional& t);

/// Syntactic classification layers reported alongside the machine-checked
/// probe. ConstantCoefficientsNonzero: every gamma = 0 and the operator is
/// nonzero. SelfTransposeNegation: transpose(P) = -P.
enum class OperatorClass { ConstantCoefficientsNonzero, SelfTransposeNegation, Unclassified };

std::string operator_class_name(OperatorClass c);

/// Two-layer regularity report: (a) the formal transpose, (b) the effective
/// injectivity probe of the transpose on the polynomial model up to N, and
/// (c) syntactic classification flags. Only (b) is machine-verified; the
/// flags merely record which classically studied family the operator falls
/// into.
struct RegularityReport {
    DiffOp transposed;
    InjectivityCertificate probe;
    OperatorClass classification = OperatorClass::Unclassified;
    std::uint32_t depth = 0;
};

RegularityReport regularity_report(const DiffOp& p_star, std::uint32_t n);

/// Solves P*(x,d) F = delta on the polynomial model at truncation N via the
/// dual solver applied to the transpose. Throws NotInjectiveError when the
/// transpose has a kernel within the truncation (the effective model then
/// refutes solvability, whatever larger spaces may allow).
Functional fundamental_solution(const DiffOp& p_star, std::uint32_t n);

/// A finite combination sum c ∂^beta delta_a of derivatives of point masses
/// at rational points.
class PointDistribution {
public:
    struct Atom {
        std::vector<mpq_class> point;
        MultiIndex beta;
    };

    explicit PointDistribution(std::uint32_t dims, FieldTag field)
        : dims_(dims), field_(field) {}

    static PointDistribution delta(std::uint32_t dims, FieldTag field); // at the origin

    std::uint32_t dims() const { return dims_; }
    const FieldTag& field() const { return field_; }

    PointDistribution& add(std::vector<mpq_class> point, MultiIndex beta, const Scalar& c);

    /// max |beta| over the atoms.
    std::uint32_t order() const;

    struct Entry {
        Atom atom;
        Scalar coeff;
    };
    std::vector<Entry> entries() const;

    /// d^alpha of the combination (no sign: plain composition of
    /// derivatives).
    PointDistribution derivative(const MultiIndex& alpha) const;

    /// The reflected distribution applied to a polynomial:
    /// (T-check * f)(x) = sum c (-1)^|beta| (d^beta f)(x + a).
    Polynomial reflected_convolve(const Polynomial& f) const;

private:
    struct AtomLess {
        bool operator()(const Atom& a, const Atom& b) const;
    };
    std::uint32_t dims_;
    FieldTag field_;
    std::map<Atom, Scalar, AtomLess> atoms_;
};

/// <S * T, x^gamma> = <S, T-check * x^gamma>: convolution of a moment
/// functional with a point-supported distribution. Output horizon =
/// S.horizon.
Functional convolve(const Functional& s, const PointDistribution& t);

} // namespace hamel

#endif
