#include "hamel/functional.hpp"

#include <algorithm>

#include "hamel/basis.hpp"

namespace hamel {

namespace {
std::uint32_t horizon_minus(std::uint32_t h, std::uint32_t k) {
    if (h == kUnboundedHorizon) return kUnboundedHorizon;
    if (k > h) throw HorizonExceededError(k, h);
    return h - k;
}
} // namespace

Functional Functional::delta_moments(std::uint32_t dims, std::uint32_t horizon, FieldTag field) {
    Functional f(dims, horizon, field);
    f.set(MultiIndex(dims, 0), Scalar::one(field));
    f.rename("delta");
    return f;
}

namespace {
// Keys are stored at exactly `dims` entries; longer inputs must only carry
// zeros in the excess positions.
MultiIndex normalize_width(const MultiIndex& m, std::uint32_t dims) {
    MultiIndex b = m;
    for (std::size_t i = dims; i < b.size(); ++i)
        if (b[i] != 0) throw Error("multi-index exponent outside the declared variables");
    b.resize(dims, 0);
    return b;
}
} // namespace

Scalar Functional::moment(const MultiIndex& beta) const {
    std::uint32_t d = total_degree(beta);
    if (horizon_ != kUnboundedHorizon && d > horizon_) throw HorizonExceededError(d, horizon_);
    auto it = table_.find(beta.size() == dims_ ? beta : normalize_width(beta, dims_));
    return it == table_.end() ? Scalar::zero(field_) : it->second;
}

Functional& Functional::set(const MultiIndex& beta, Scalar value) {
    require_same_field(field_, value.field());
    std::uint32_t d = total_degree(beta);
    if (horizon_ != kUnboundedHorizon && d > horizon_) throw HorizonExceededError(d, horizon_);
    MultiIndex b = beta.size() == dims_ ? beta : normalize_width(beta, dims_);
    if (value.is_zero()) table_.erase(b);
    else table_.insert_or_assign(b, std::move(value));
    return *this;
}

Functional& Functional::rename(std::string provenance) {
    provenance_ = std::move(provenance);
    return *this;
}

Functional Functional::truncated(std::uint32_t new_horizon) const {
    // Widening is never silent: values past the current horizon are unknown.
    if (horizon_ != kUnboundedHorizon && new_horizon > horizon_)
        throw HorizonExceededError(new_horizon, horizon_);
    Functional out(dims_, new_horizon, field_);
    for (const auto& [m, v] : table_)
        if (total_degree(m) <= new_horizon) out.set(m, v);
    out.rename(provenance_);
    return out;
}

bool Functional::operator==(const Functional& o) const {
    return dims_ == o.dims_ && horizon_ == o.horizon_ && field_ == o.field_ &&
           std::equal(table_.begin(), table_.end(), o.table_.begin(), o.table_.end());
}

bool Functional::agrees_with(const Functional& o, std::uint32_t up_to) const {
    if (dims_ != o.dims_ || !(field_ == o.field_)) return false;
    if ((horizon_ != kUnboundedHorizon && horizon_ < up_to) ||
        (o.horizon_ != kUnboundedHorizon && o.horizon_ < up_to))
        throw HorizonExceededError(up_to, std::min(horizon_, o.horizon_));
    for (const auto& beta : monomials_up_to(dims_, up_to))
        if (moment(beta) != o.moment(beta)) return false;
    return true;
}

Functional operator+(const Functional& a, const Functional& b) {
    if (a.dims() != b.dims()) throw Error("functional dimension mismatch");
    require_same_field(a.field(), b.field());
    Functional r(a.dims(), std::min(a.horizon(), b.horizon()), a.field());
    for (const auto& [m, v] : a.table())
        if (total_degree(m) <= r.horizon()) r.set(m, v);
    for (const auto& [m, v] : b.table())
        if (total_degree(m) <= r.horizon()) r.set(m, r.moment(m) + v);
    return r;
}

Functional operator-(const Functional& a, const Functional& b) {
    return a + (-Scalar::one(b.field())) * b;
}

Functional operator*(const Scalar& c, const Functional& t) {
    require_same_field(c.field(), t.field());
    Functional r(t.dims(), t.horizon(), t.field());
    for (const auto& [m, v] : t.table()) r.set(m, c * v);
    return r;
}

std::string Functional::str() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [m, v] : table_) {
        if (!first) s += ", ";
        s += multi_str(m) + " -> " + v.str();
        first = false;
    }
    s += "}";
    if (horizon_ != kUnboundedHorizon) s += " (horizon " + std::to_string(horizon_) + ")";
    return s;
}

Scalar eval_bracket(const Functional& t, const FinSuppVec& v) {
    require_same_field(t.field(), v.field());
    Scalar acc = Scalar::zero(t.field());
    for (const auto& [k, c] : v.entries()) {
        if (!k.is_tuple()) throw Error("bracket needs tuple indices");
        acc += c * t.moment(k.tuple_value());
    }
    return acc;
}

Functional restricted_dual_embed(const FinSuppVec& v, std::uint32_t dims) {
    Functional f(dims, kUnboundedHorizon, v.field());
    for (const auto& [k, c] : v.entries()) {
        if (!k.is_tuple()) throw Error("restricted dual embedding needs tuple indices");
        f.set(k.tuple_value(), c);
    }
    f.rename("restricted_dual");
    return f;
}

DoubleDualVector double_dual_embed(FinSuppVec v) { return DoubleDualVector(std::move(v)); }

EmbeddedDual::EmbeddedDual(FinSuppVec t_on_u, std::vector<std::pair<Index, FinSuppVec>> u_basis,
                           std::vector<FinSuppVec> w_basis)
    : t_on_u_(std::move(t_on_u)), labeled_(std::move(u_basis)), u_count_(labeled_.size()) {
    std::vector<FinSuppVec> all;
    for (const auto& [l, b] : labeled_) all.push_back(b);
    for (auto& w : w_basis) all.push_back(w);
    auto cert = is_free(all);
    if (!cert.free()) throw NotFreeError(cert.witness);
    // W vectors get synthetic labels so the joint decomposition can use
    // coordinate_iso directly.
    for (std::size_t i = 0; i < w_basis.size(); ++i)
        labeled_.emplace_back(Index::atom("__w" + std::to_string(i)), std::move(w_basis[i]));
}

Scalar EmbeddedDual::eval(const FinSuppVec& v) const {
    FinSuppVec coords(v.field());
    try {
        coords = coordinate_iso(v, labeled_);
    } catch (const NotInSpanError&) {
        throw DecompositionFailedError();
    }
    Scalar acc = Scalar::zero(v.field());
    for (std::size_t i = 0; i < u_count_; ++i)
        acc += coords.coeff(labeled_[i].first) * t_on_u_.coeff(labeled_[i].first);
    return acc;
}

FinSuppVec EmbeddedDual::coefficients_on(const std::vector<Index>& ambient) const {
    FieldTag field = t_on_u_.field();
    FinSuppVec out(field);
    for (const auto& s : ambient) out.set(s, eval(basis_vector(s, field)));
    return out;
}

EmbeddedDual embed_dual_via_complement(const FinSuppVec& t_on_u,
                                       const std::vector<std::pair<Index, FinSuppVec>>& u_basis,
                                       const std::vector<FinSuppVec>& w_basis) {
    return EmbeddedDual(t_on_u, u_basis, w_basis);
}

Functional derivative(const MultiIndex& alpha, const Functional& t) {
    const FieldTag field = t.field();
    Scalar sign = total_degree(alpha) % 2 == 0 ? Scalar::one(field) : -Scalar::one(field);
    Functional r(t.dims(), t.horizon(), field);
    for (const auto& [gamma, v] : t.table()) {
        MultiIndex beta = multi_add(gamma, alpha);
        if (t.horizon() != kUnboundedHorizon && total_degree(beta) > t.horizon()) continue;
        // <d^a T, x^b> = (-1)^|a| fall(b,a) T(b-a) with b = gamma + alpha.
        r.set(beta, sign * Scalar::from_mpz(field, falling_factorial(beta, alpha)) * v);
    }
    r.rename("derivative");
    return r;
}

Functional poly_multiply(const Polynomial& f, const Functional& t) {
    require_same_field(f.field(), t.field());
    std::uint32_t out_h = horizon_minus(t.horizon(), f.degree());
    Functional r(t.dims(), out_h, t.field());
    for (const auto& [m, tv] : t.table()) {
        for (const auto& [g, fc] : f.terms()) {
            auto beta = multi_sub(m, g);
            if (!beta) continue;
            if (out_h != kUnboundedHorizon && total_degree(*beta) > out_h) continue;
            r.set(*beta, r.moment(*beta) + fc * tv);
        }
    }
    r.rename("poly_multiply");
    return r;
}

Functional inflect(const Functional& t) {
    Functional r(t.dims(), t.horizon(), t.field());
    for (const auto& [m, v] : t.table())
        r.set(m, total_degree(m) % 2 == 0 ? v : -v);
    r.rename("inflect");
    return r;
}

Functional translate(const std::vector<Scalar>& h, const Functional& t) {
    const FieldTag field = t.field();
    bool h_zero = true;
    for (const auto& c : h)
        if (!c.is_zero()) h_zero = false;
    if (h_zero) return t;
    if (t.unbounded() && !t.table().empty())
        throw Error("translate of an unbounded-horizon functional is not finitely representable; truncate first");

    Functional r(t.dims(), t.horizon(), field);
    if (t.unbounded()) return r;
    for (const auto& beta : monomials_up_to(t.dims(), t.horizon())) {
        // <T, (x+h)^beta> = sum_{gamma<=beta} C(beta,gamma) h^(beta-gamma) T(gamma)
        Scalar acc = Scalar::zero(field);
        for (const auto& [gamma, tv] : t.table()) {
            auto rest = multi_sub(beta, gamma);
            if (!rest) continue;
            Scalar hp = Scalar::one(field);
            for (std::size_t i = 0; i < rest->size(); ++i) {
                if ((*rest)[i] == 0) continue;
                Scalar hi = i < h.size() ? h[i] : Scalar::zero(field);
                hp = hp * hi.pow((*rest)[i]);
            }
            acc += Scalar::from_mpz(field, multi_binomial(beta, gamma)) * hp * tv;
        }
        r.set(beta, acc);
    }
    r.rename("translate");
    return r;
}

Functional schwartz_moments(const PiecewisePolynomial& f, std::uint32_t horizon) {
    if (horizon == kUnboundedHorizon) throw Error("schwartz_moments needs a finite horizon");
    const FieldTag q = FieldTag::Q();
    Functional r(1, horizon, q);
    for (std::uint32_t k = 0; k <= horizon; ++k) {
        mpq_class mk(0);
        for (const auto& piece : f.pieces) {
            for (std::size_t j = 0; j < piece.coeffs.size(); ++j) {
                if (piece.coeffs[j] == 0) continue;
                // integral of c x^(j+k) over [lo,hi]
                unsigned long e = static_cast<unsigned long>(j) + k + 1;
                mpq_class hi_p, lo_p;
                mpz_class hn, hd, ln, ld;
                mpz_pow_ui(hn.get_mpz_t(), piece.hi.get_num().get_mpz_t(), e);
                mpz_pow_ui(hd.get_mpz_t(), piece.hi.get_den().get_mpz_t(), e);
                mpz_pow_ui(ln.get_mpz_t(), piece.lo.get_num().get_mpz_t(), e);
                mpz_pow_ui(ld.get_mpz_t(), piece.lo.get_den().get_mpz_t(), e);
                hi_p = mpq_class(hn) / mpq_class(hd);
                lo_p = mpq_class(ln) / mpq_class(ld);
                mk += piece.coeffs[j] * (hi_p - lo_p) / mpq_class(e);
            }
        }
        r.set(MultiIndex{k}, Scalar::rational(mk));
    }
    r.rename("schwartz_moments");
    return r;
}

int IntPoly::degree() const {
    for (std::size_t i = c.size(); i > 0; --i)
        if (c[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

const mpz_class& IntPoly::lead() const {
    static const mpz_class zero(0);
    int d = degree();
    return d < 0 ? zero : c[static_cast<std::size_t>(d)];
}

mpz_class IntPoly::eval(unsigned long n) const {
    mpz_class acc(0);
    const mpz_class nz(n);
    for (std::size_t i = c.size(); i > 0; --i) acc = acc * nz + c[i - 1];
    return acc;
}

mpq_class RationalFunctionN::eval_at(unsigned long n) const {
    mpz_class d = den.eval(n);
    if (d == 0) throw DivisionByZeroError();
    mpq_class q(num.eval(n), d);
    q.canonicalize();
    return q;
}

ParametricMomentFamily& ParametricMomentFamily::set(const MultiIndex& beta, RationalFunctionN f) {
    if (f.den.is_zero()) throw Error("family denominator is identically zero");
    entries_.insert_or_assign(beta, std::move(f));
    return *this;
}

Functional ParametricMomentFamily::at(unsigned long n, std::uint32_t horizon) const {
    Functional r(dims_, horizon, FieldTag::Q());
    for (const auto& [beta, f] : entries_) {
        if (total_degree(beta) > horizon) continue;
        r.set(beta, Scalar::rational(f.eval_at(n)));
    }
    return r;
}

WeakLimitResult weak_limit(const ParametricMomentFamily& family, std::uint32_t horizon) {
    if (horizon == kUnboundedHorizon) throw Error("weak_limit needs a finite horizon");
    WeakLimitResult out;
    Functional lim(family.dims(), horizon, FieldTag::Q());
    for (const auto& [beta, f] : family.entries()) {
        if (total_degree(beta) > horizon) continue;
        int dn = f.num.degree(), dd = f.den.degree();
        if (dn > dd) {
            out.divergent.push_back(beta);
            continue;
        }
        if (dn == dd && dn >= 0) {
            mpq_class q(f.num.lead(), f.den.lead());
            q.canonicalize();
            lim.set(beta, Scalar::rational(q));
        }
        // dn < dd: the entry tends to zero.
    }
    if (out.divergent.empty()) {
        lim.rename("weak_limit");
        out.limit = std::move(lim);
    }
    return out;
}

} // namespace hamel
