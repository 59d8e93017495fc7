#include "hamel/cardinal.hpp"

namespace hamel {

Cardinal Cardinal::finite(mpz_class n) {
    if (n < 0) throw Error("cardinals are non-negative");
    Cardinal c;
    c.finite_ = true;
    c.value_ = std::move(n);
    return c;
}

Cardinal Cardinal::aleph(std::uint32_t k) {
    Cardinal c;
    c.finite_ = false;
    c.aleph_ = k;
    return c;
}

const mpz_class& Cardinal::finite_value() const {
    if (!finite_) throw Error("not a finite cardinal");
    return value_;
}

std::uint32_t Cardinal::aleph_index() const {
    if (finite_) throw Error("not an infinite cardinal");
    return aleph_;
}

bool Cardinal::operator==(const Cardinal& o) const {
    if (finite_ != o.finite_) return false;
    return finite_ ? value_ == o.value_ : aleph_ == o.aleph_;
}

bool Cardinal::operator<(const Cardinal& o) const {
    if (finite_ && o.finite_) return value_ < o.value_;
    if (finite_ != o.finite_) return finite_; // finite < aleph
    return aleph_ < o.aleph_;
}

std::string Cardinal::str() const {
    if (finite_) return value_.get_str();
    switch (aleph_) {
        case 0: return "aleph0";
        case 1: return "c";
        case 2: return "c+";
        case 3: return "c++";
        default: return "aleph(" + std::to_string(aleph_) + ")";
    }
}

Cardinal Cardinal::parse(const std::string& s) {
    if (s.empty()) throw Error("empty cardinal");
    if (s == "aleph0") return aleph(0);
    if (s == "c") return aleph(1);
    if (s == "c+") return aleph(2);
    if (s == "c++") return aleph(3);
    if (s.rfind("aleph(", 0) == 0 && s.back() == ')') {
        std::string digits = s.substr(6, s.size() - 7);
        if (digits.empty()) throw Error("malformed cardinal: " + s);
        std::uint64_t k = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw Error("malformed cardinal: " + s);
            k = k * 10 + static_cast<std::uint64_t>(c - '0');
            if (k > 0xffffffffull) throw Error("aleph index too large: " + s);
        }
        return aleph(static_cast<std::uint32_t>(k));
    }
    for (char c : s)
        if (c < '0' || c > '9') throw Error("malformed cardinal: " + s);
    return finite(mpz_class(s));
}

Cardinal card_max(const Cardinal& a, const Cardinal& b) { return a < b ? b : a; }

Cardinal card_succ(const Cardinal& a) {
    if (a.is_finite()) return Cardinal::finite(a.finite_value() + 1);
    return Cardinal::aleph(a.aleph_index() + 1);
}

Cardinal card_pow(const Cardinal& y, const Cardinal& x) {
    if (x.is_finite()) {
        if (x.finite_value() == 0) return Cardinal::finite(1ul);
        if (y.is_finite()) {
            if (!x.finite_value().fits_ulong_p()) throw Error("finite exponent too large");
            mpz_class r;
            mpz_pow_ui(r.get_mpz_t(), y.finite_value().get_mpz_t(), x.finite_value().get_ui());
            return Cardinal::finite(r);
        }
        return y; // y infinite, finite positive exponent
    }
    // Infinite exponent. Degenerate bases stay exact; otherwise GCH gives
    // y^x = max{y, 2^x} = max{y, succ(x)}.
    if (y.is_finite() && y.finite_value() == 0) return Cardinal::finite(0ul);
    if (y.is_finite() && y.finite_value() == 1) return Cardinal::finite(1ul);
    return card_max(y, card_succ(x));
}

Cardinal card_of_space(const Cardinal& dim_v, const Cardinal& card_k) {
    if (dim_v.is_finite() && dim_v.finite_value() == 0)
        throw Error("card_of_space needs a nontrivial space");
    return card_max(dim_v, card_k);
}

Cardinal dim_of_dual(const Cardinal& dim_v, const Cardinal& card_k) {
    if (dim_v.is_finite()) return dim_v; // the max formula fails here
    return card_max(card_succ(dim_v), card_k);
}

std::vector<SpaceCardinalities> example_table() {
    const Cardinal aleph0 = Cardinal::aleph0();
    const Cardinal c = Cardinal::continuum();

    struct Input {
        const char* name;
        Cardinal dim;
        Cardinal field_card;
    };
    // Dimensions are the classical inputs (free-set arguments); everything
    // else is computed.
    const Input inputs[] = {
        {"R|Q", c, aleph0},       // Hamel's example: R as a Q-vector space
        {"R|A", c, aleph0},       // over the real algebraic numbers
        {"R^N", c, c},            // all real sequences
        {"C^N", c, c},            // all complex sequences
        {"C[z]", aleph0, c},      // polynomials
        {"D(Omega)", c, c},       // test functions
        {"E(Omega)", c, c},       // smooth functions
        {"D'(Omega)", c, c},      // Schwartz distributions
        {"E'(Omega)", c, c},      // compactly supported distributions
        {"L2(Omega)", c, c},
        {"l2(C)", c, c},
        {"H", c, c},              // separable Hilbert space
    };

    std::vector<SpaceCardinalities> out;
    for (const auto& in : inputs) {
        SpaceCardinalities row;
        row.name = in.name;
        row.field_card = in.field_card;
        row.dim = in.dim;
        row.card = card_of_space(row.dim, in.field_card);
        row.dim_dual = dim_of_dual(row.dim, in.field_card);
        row.card_dual = card_of_space(row.dim_dual, in.field_card);
        row.dim_double_dual = dim_of_dual(row.dim_dual, in.field_card);
        row.card_double_dual = card_of_space(row.dim_double_dual, in.field_card);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace hamel
