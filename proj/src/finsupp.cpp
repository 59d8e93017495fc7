#include "hamel/finsupp.hpp"

#include "hamel/basis.hpp"
#include "hamel/linalg.hpp"

namespace hamel {

Scalar FinSuppVec::coeff(const Index& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

FinSuppVec& FinSuppVec::set(const Index& s, Scalar value) {
    require_same_field(field_, value.field());
    if (value.is_zero()) {
        entries_.erase(s);
    } else {
        entries_.insert_or_assign(s, std::move(value));
    }
    return *this;
}

FinSuppVec& FinSuppVec::add_scaled(const Scalar& c, const FinSuppVec& v) {
    require_same_field(field_, v.field());
    require_same_field(field_, c.field());
    if (c.is_zero()) return *this;
    for (const auto& [k, val] : v.entries_) {
        auto it = entries_.find(k);
        if (it == entries_.end()) {
            entries_.emplace(k, c * val);
        } else {
            it->second += c * val;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

std::uint32_t FinSuppVec::max_tuple_degree() const {
    std::uint32_t d = 0;
    for (const auto& [k, v] : entries_)
        if (k.is_tuple()) d = std::max(d, total_degree(k.tuple_value()));
    return d;
}

FinSuppVec operator+(const FinSuppVec& a, const FinSuppVec& b) {
    FinSuppVec r = a;
    r.add_scaled(Scalar::one(a.field()), b);
    return r;
}

FinSuppVec operator-(const FinSuppVec& a, const FinSuppVec& b) {
    FinSuppVec r = a;
    r.add_scaled(-Scalar::one(a.field()), b);
    return r;
}

FinSuppVec operator*(const Scalar& c, const FinSuppVec& v) {
    FinSuppVec r(v.field());
    r.add_scaled(c, v);
    return r;
}

FinSuppVec FinSuppVec::operator-() const { return -Scalar::one(field_) * *this; }

std::string FinSuppVec::str() const {
    if (entries_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first) s += " + ";
        s += v.str() + "*e" + k.str();
        first = false;
    }
    return s;
}

FinSuppVec basis_vector(const Index& s, const FieldTag& field) {
    FinSuppVec v(field);
    v.set(s, Scalar::one(field));
    return v;
}

FinSuppVec basis_vector(const MultiIndex& m, const FieldTag& field) {
    return basis_vector(Index::tuple(m), field);
}

FinSuppVec linear_combine(const std::vector<std::pair<Scalar, FinSuppVec>>& terms) {
    if (terms.empty()) return FinSuppVec::zero(FieldTag::Q());
    FinSuppVec r(terms.front().second.field());
    for (const auto& [c, v] : terms) r.add_scaled(c, v);
    return r;
}

std::vector<Index> spectrum(const FinSuppVec& v) {
    std::vector<Index> out;
    out.reserve(v.entries().size());
    for (const auto& [k, c] : v.entries()) out.push_back(k);
    return out;
}

Scalar inner_product(const FinSuppVec& v, const FinSuppVec& w) {
    require_same_field(v.field(), w.field());
    Scalar acc = Scalar::zero(v.field());
    const auto& a = v.entries();
    const auto& b = w.entries();
    // walk the smaller support
    if (a.size() <= b.size()) {
        for (const auto& [k, av] : a) {
            auto it = b.find(k);
            if (it != b.end()) acc += av.conj() * it->second;
        }
    } else {
        for (const auto& [k, bv] : b) {
            auto it = a.find(k);
            if (it != a.end()) acc += it->second.conj() * bv;
        }
    }
    return acc;
}

FinSuppVec coordinate_iso(const FinSuppVec& v,
                          const std::vector<std::pair<Index, FinSuppVec>>& basis) {
    std::vector<FinSuppVec> cols;
    cols.reserve(basis.size());
    for (const auto& [label, b] : basis) cols.push_back(b);

    auto cert = is_free(cols);
    if (!cert.free()) throw NotFreeError(cert.witness);

    std::vector<FinSuppVec> all = cols;
    all.push_back(v);
    auto rows = support_union(all);
    Matrix m = Matrix::from_columns(cols, rows);
    std::vector<Scalar> rhs(rows.size(), Scalar::zero(v.field()));
    for (std::size_t i = 0; i < rows.size(); ++i) rhs[i] = v.coeff(rows[i]);

    auto solved = solve_linear(m, rhs);
    FieldTag field = v.field();
    if (!solved.consistent) {
        // v minus the combination read off the pivot rows: the exact part of
        // v outside the span.
        FinSuppVec residual = v;
        for (std::size_t j = 0; j < cols.size(); ++j)
            residual.add_scaled(-solved.solution[j], cols[j]);
        throw NotInSpanError(std::move(residual));
    }

    FinSuppVec out(field);
    for (std::size_t j = 0; j < basis.size(); ++j) out.set(basis[j].first, solved.solution[j]);
    return out;
}

} // namespace hamel
