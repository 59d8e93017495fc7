#include "hamel/index.hpp"

#include <algorithm>

namespace hamel {

std::uint32_t total_degree(const MultiIndex& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

MultiIndex multi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

std::optional<MultiIndex> multi_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (r[i] < b[i]) return std::nullopt;
        r[i] -= b[i];
    }
    return r;
}

bool multi_less(const MultiIndex& a, const MultiIndex& b) {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t ai = i < a.size() ? a[i] : 0;
        std::uint32_t bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai > bi;
    }
    return a.size() < b.size();
}

namespace {
void enumerate_degree(std::uint32_t dims, std::uint32_t degree, MultiIndex& cur,
                      std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == dims) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::uint32_t e = degree; e + 1 != 0; --e) {
        cur.push_back(e);
        enumerate_degree(dims, degree - e, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<MultiIndex> monomials_of_degree(std::uint32_t dims, std::uint32_t degree) {
    std::vector<MultiIndex> out;
    if (dims == 0) return out;
    MultiIndex cur;
    enumerate_degree(dims, degree, cur, out);
    return out;
}

std::vector<MultiIndex> monomials_up_to(std::uint32_t dims, std::uint32_t max_degree) {
    std::vector<MultiIndex> out;
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
        auto level = monomials_of_degree(dims, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string multi_str(const MultiIndex& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

Index Index::atom(std::string name) {
    Index i;
    i.v_ = std::move(name);
    return i;
}

Index Index::tuple(MultiIndex t) {
    Index i;
    i.v_ = std::move(t);
    return i;
}

bool Index::operator<(const Index& o) const {
    if (is_atom() != o.is_atom()) return is_atom();
    if (is_atom()) return atom_name() < o.atom_name();
    return multi_less(tuple_value(), o.tuple_value());
}

std::string Index::str() const {
    if (is_atom()) return atom_name();
    return multi_str(tuple_value());
}

} // namespace hamel
