#include "hamel/polynomial.hpp"

#include <algorithm>

namespace hamel {

mpz_class falling_factorial(const MultiIndex& b, const MultiIndex& a) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint32_t ai = i < a.size() ? a[i] : 0;
        std::uint32_t bi = i < b.size() ? b[i] : 0;
        if (ai > bi) return 0;
        for (std::uint32_t k = 0; k < ai; ++k) r *= static_cast<unsigned long>(bi - k);
    }
    return r;
}

mpz_class multi_binomial(const MultiIndex& b, const MultiIndex& a) {
    mpz_class r = 1;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint32_t ai = i < a.size() ? a[i] : 0;
        std::uint32_t bi = i < b.size() ? b[i] : 0;
        if (ai > bi) return 0;
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), bi, ai);
        r *= c;
    }
    return r;
}

Polynomial Polynomial::constant(std::uint32_t dims, const Scalar& c) {
    Polynomial p(dims, c.field());
    p.add_term(MultiIndex(dims, 0), c);
    return p;
}

Polynomial Polynomial::monomial(std::uint32_t dims, const MultiIndex& m, const Scalar& c) {
    Polynomial p(dims, c.field());
    p.add_term(m, c);
    return p;
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Scalar Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Polynomial& Polynomial::set(const MultiIndex& m, Scalar c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) terms_.erase(m);
    else terms_.insert_or_assign(m, std::move(c));
    return *this;
}

Polynomial& Polynomial::add_term(const MultiIndex& m, const Scalar& c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    Polynomial r(std::max(a.dims_, b.dims_), a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(multi_add(ma, mb), ca * cb);
    return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
    Polynomial r(p.dims_, p.field_);
    for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
    return r;
}

Polynomial Polynomial::operator-() const { return -Scalar::one(field_) * *this; }

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
    Polynomial r(dims_, field_);
    for (const auto& [m, c] : terms_) {
        auto rest = multi_sub(m, alpha);
        if (!rest) continue;
        r.add_term(*rest, Scalar::from_mpz(field_, falling_factorial(m, alpha)) * c);
    }
    return r;
}

Polynomial Polynomial::shifted(const std::vector<Scalar>& h) const {
    Polynomial r(dims_, field_);
    for (const auto& [m, c] : terms_) {
        // (x+h)^m as the product over variables of (x_i+h_i)^{m_i}.
        Polynomial expansion = Polynomial::constant(dims_, Scalar::one(field_));
        for (std::uint32_t i = 0; i < dims_; ++i) {
            std::uint32_t mi = i < m.size() ? m[i] : 0;
            Polynomial factor(dims_, field_);
            Scalar hi = i < h.size() ? h[i] : Scalar::zero(field_);
            for (std::uint32_t k = 0; k <= mi; ++k) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), mi, k);
                MultiIndex xm(dims_, 0);
                xm[i] = k;
                factor.add_term(xm, Scalar::from_mpz(field_, bin) * hi.pow(mi - k));
            }
            expansion = expansion * factor;
        }
        r = r + c * expansion;
    }
    return r;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    Scalar acc = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            Scalar xi = i < point.size() ? point[i] : Scalar::zero(field_);
            t = t * xi.pow(m[i]);
        }
        acc += t;
    }
    return acc;
}

FinSuppVec Polynomial::to_finsupp() const {
    FinSuppVec v(field_);
    for (const auto& [m, c] : terms_) v.set(Index::tuple(m), c);
    return v;
}

Polynomial Polynomial::from_finsupp(std::uint32_t dims, const FinSuppVec& v) {
    Polynomial p(dims, v.field());
    for (const auto& [k, c] : v.entries()) {
        if (!k.is_tuple()) throw Error("polynomial coefficients require tuple indices");
        MultiIndex m = k.tuple_value();
        for (std::size_t i = dims; i < m.size(); ++i)
            if (m[i] != 0) throw Error("monomial exponent outside the declared variables");
        m.resize(dims, 0);
        p.add_term(m, c);
    }
    return p;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        s += c.str();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        first = false;
    }
    return s;
}

} // namespace hamel
