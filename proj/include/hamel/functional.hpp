#ifndef HAMEL_FUNCTIONAL_HPP
#define HAMEL_FUNCTIONAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamel/finsupp.hpp"
#include "hamel/index.hpp"
#include "hamel/polynomial.hpp"
#include "hamel/scalar.hpp"

namespace hamel {

/// Sentinel horizon for functionals defined at every degree (zero tail).
inline constexpr std::uint32_t kUnboundedHorizon = 0xffffffffu;

/// A linear functional on the graded monomial basis, stored as a truncated
/// exact table of moments. Every multi-degree of total degree <= horizon has
/// a definite value (absent entries are exact zeros); degrees past the
/// horizon are undefined and reading them fails loudly. Operations track the
/// tightest valid horizon of their output; nothing is ever silently
/// truncated.
class Functional {
public:
    using Table = std::map<MultiIndex, Scalar, bool (*)(const MultiIndex&, const MultiIndex&)>;

    Functional(std::uint32_t dims, std::uint32_t horizon, FieldTag field)
        : dims_(dims), horizon_(horizon), field_(field), table_(&multi_less) {}

    static Functional zero(std::uint32_t dims, std::uint32_t horizon, FieldTag field) {
        return {dims, horizon, field};
    }
    /// Moments of the Dirac functional at the origin: 1 at degree 0, else 0.
    static Functional delta_moments(std::uint32_t dims, std::uint32_t horizon, FieldTag field);

    std::uint32_t dims() const { return dims_; }
    std::uint32_t horizon() const { return horizon_; }
    bool unbounded() const { return horizon_ == kUnboundedHorizon; }
    const FieldTag& field() const { return field_; }
    const Table& table() const { return table_; }
    const std::string& provenance() const { return provenance_; }

    /// The moment at beta. Throws HorizonExceededError past the horizon.
    Scalar moment(const MultiIndex& beta) const;

    Functional& set(const MultiIndex& beta, Scalar value);
    Functional& rename(std::string provenance);

    Functional truncated(std::uint32_t new_horizon) const;

    /// Exact equality of dims, horizon and table (provenance ignored).
    bool operator==(const Functional& o) const;
    /// Equality of all moments of total degree <= up_to (both horizons must
    /// reach that far).
    bool agrees_with(const Functional& o, std::uint32_t up_to) const;

    /// Sum/scale; the horizon of a sum is the smaller of the two horizons.
    friend Functional operator+(const Functional& a, const Functional& b);
    friend Functional operator-(const Functional& a, const Functional& b);
    friend Functional operator*(const Scalar& c, const Functional& t);

    std::string str() const;

private:
    std::uint32_t dims_;
    std::uint32_t horizon_;
    FieldTag field_;
    Table table_;
    std::string provenance_;
};

/// <T, v> = sum v(beta) T(beta), exact and linear in v. Every index of v must
/// be a tuple within the horizon.
Scalar eval_bracket(const Functional& t, const FinSuppVec& v);

/// sigma(sum c_s e_s) = sum c_s Phi_s: the restricted-dual embedding. The
/// result has the same finite table and an unbounded horizon (zero tail).
Functional restricted_dual_embed(const FinSuppVec& v, std::uint32_t dims);

/// iota(v): the canonical double-dual vector, an evaluation rule on
/// functionals with iota(v)(T) = <T, v>.
class DoubleDualVector {
public:
    explicit DoubleDualVector(FinSuppVec v) : v_(std::move(v)) {}
    Scalar operator()(const Functional& t) const { return eval_bracket(t, v_); }
    const FinSuppVec& vector() const { return v_; }

private:
    FinSuppVec v_;
};

DoubleDualVector double_dual_embed(FinSuppVec v);

/// A functional on span(U (+) W) given by values on the U basis and zero on
/// W: evaluation decomposes v = u + w and returns T(u).
class EmbeddedDual {
public:
    EmbeddedDual(FinSuppVec t_on_u, std::vector<std::pair<Index, FinSuppVec>> u_basis,
                 std::vector<FinSuppVec> w_basis);

    /// Throws DecompositionFailedError when v is outside span(U) + span(W).
    Scalar eval(const FinSuppVec& v) const;

    /// Values on the coordinate vectors e_s for the given ambient indices,
    /// i.e. the embedded functional written in restricted-dual form. Every
    /// e_s must decompose.
    FinSuppVec coefficients_on(const std::vector<Index>& ambient) const;

private:
    FinSuppVec t_on_u_;
    std::vector<std::pair<Index, FinSuppVec>> labeled_; // U labels, then W labels
    std::size_t u_count_;
};

/// sigma_W(T): embeds a functional known on U into the dual of U (+) W by
/// killing the W component. t_on_u assigns a value to each U basis label.
EmbeddedDual embed_dual_via_complement(const FinSuppVec& t_on_u,
                                       const std::vector<std::pair<Index, FinSuppVec>>& u_basis,
                                       const std::vector<FinSuppVec>& w_basis);

/// <d^alpha T, x^beta> = (-1)^|alpha| <T, d^alpha x^beta>. Horizon preserved.
Functional derivative(const MultiIndex& alpha, const Functional& t);

/// <f T, x^beta> = <T, f x^beta>. Horizon shrinks by deg f.
Functional poly_multiply(const Polynomial& f, const Functional& t);

/// Inflection x -> -x: moment at beta gains the sign (-1)^|beta|.
Functional inflect(const Functional& t);

/// Translation: <tau_h T, x^beta> = <T, (x+h)^beta>, expanded binomially.
/// Horizon preserved. (The alias T(y-h) of the literature denotes the same
/// operator; the bracket form above is the implemented definition.)
Functional translate(const std::vector<Scalar>& h, const Functional& t);

/// One-variable piecewise polynomial with rational breakpoints, the effective
/// carrier of the classical-function embedding.
struct PiecewisePolynomial {
    struct Piece {
        mpq_class lo, hi;
        std::vector<mpq_class> coeffs; // ascending powers
    };
    std::vector<Piece> pieces;
};

/// Moments m_k = integral f(x) x^k dx for k <= horizon, exact.
Functional schwartz_moments(const PiecewisePolynomial& f, std::uint32_t horizon);

/// Integer-coefficient polynomial in one parameter n, ascending powers.
struct IntPoly {
    std::vector<mpz_class> c;
    int degree() const; // -1 for zero
    bool is_zero() const { return degree() < 0; }
    const mpz_class& lead() const;
    mpz_class eval(unsigned long n) const;
};

/// A per-degree moment given as num(n)/den(n).
struct RationalFunctionN {
    IntPoly num, den;
    mpq_class eval_at(unsigned long n) const; // exact; den(n) must be nonzero
};

/// A sequence of functionals T_n described degree-by-degree by rational
/// functions of n. Missing degrees are identically zero.
class ParametricMomentFamily {
public:
    explicit ParametricMomentFamily(std::uint32_t dims)
        : dims_(dims), entries_(&multi_less) {}

    std::uint32_t dims() const { return dims_; }
    ParametricMomentFamily& set(const MultiIndex& beta, RationalFunctionN f);
    const std::map<MultiIndex, RationalFunctionN, bool (*)(const MultiIndex&, const MultiIndex&)>&
    entries() const { return entries_; }

    /// The member functional at a concrete n.
    Functional at(unsigned long n, std::uint32_t horizon) const;

private:
    std::uint32_t dims_;
    std::map<MultiIndex, RationalFunctionN, bool (*)(const MultiIndex&, const MultiIndex&)> entries_;
};

struct WeakLimitResult {
    std::optional<Functional> limit;       // set iff divergent is empty
    std::vector<MultiIndex> divergent;     // degrees whose entry diverges
    bool converged() const { return divergent.empty(); }
};

/// Pointwise limit as n -> oo, decided exactly by degree comparison:
/// deg num < deg den gives 0, equal degrees give the leading-coefficient
/// ratio, deg num > deg den is divergence at that entry.
WeakLimitResult weak_limit(const ParametricMomentFamily& family, std::uint32_t horizon);

} // namespace hamel

#endif
