#ifndef HAMEL_CARDINAL_HPP
#define HAMEL_CARDINAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hamel/errors.hpp"

namespace hamel {

/// A cardinal under ZFC+GCH: either a finite value or an aleph. GCH is baked
/// in as "power set = successor", so Aleph(0) is card(N), Aleph(1) is the
/// continuum c, Aleph(2) is c+, and so on. Total order: finite values by
/// magnitude, every finite below every aleph, alephs by index.
class Cardinal {
public:
    static Cardinal finite(mpz_class n);
    static Cardinal finite(unsigned long n) { return finite(mpz_class(n)); }
    static Cardinal aleph(std::uint32_t k);
    static Cardinal aleph0() { return aleph(0); }
    static Cardinal continuum() { return aleph(1); }

    bool is_finite() const { return finite_; }
    const mpz_class& finite_value() const;
    std::uint32_t aleph_index() const;

    bool operator==(const Cardinal& o) const;
    bool operator<(const Cardinal& o) const;
    bool operator<=(const Cardinal& o) const { return *this == o || *this < o; }
    bool operator>(const Cardinal& o) const { return o < *this; }
    bool operator>=(const Cardinal& o) const { return o <= *this; }

    /// "7", "aleph0", "c", "c+", "c++", "aleph(k)" for k >= 4.
    std::string str() const;
    static Cardinal parse(const std::string& s);

private:
    bool finite_ = true;
    mpz_class value_{0};
    std::uint32_t aleph_ = 0;
};

Cardinal card_max(const Cardinal& a, const Cardinal& b);

/// Successor: n+1 for finite, Aleph(k+1) for Aleph(k). Under GCH the
/// successor of an infinite cardinal is also its power set 2^k.
Cardinal card_succ(const Cardinal& a);

/// Cardinal exponentiation y^x under GCH: for infinite x this collapses to
/// max{y, succ(x)} (with the degenerate finite bases 0 and 1 kept exact);
/// finite exponents are repeated products.
Cardinal card_pow(const Cardinal& y, const Cardinal& x);

/// card V = max{dim V, card K} for a nontrivial space.
Cardinal card_of_space(const Cardinal& dim_v, const Cardinal& card_k);

/// dim V* = max{succ(dim V), card K} for infinite-dimensional V; the formula
/// fails for finite dimensions, where the dual dimension is dim V itself.
Cardinal dim_of_dual(const Cardinal& dim_v, const Cardinal& card_k);

/// One row of the worked dimension table: everything derived from (dim,
/// card K) through card_of_space / dim_of_dual, nothing hardcoded.
struct SpaceCardinalities {
    std::string name;
    Cardinal field_card;
    Cardinal dim, card;
    Cardinal dim_dual, card_dual;
    Cardinal dim_double_dual, card_double_dual;
};

/// The classical function-space examples: Hamel's R over Q, sequence spaces,
/// polynomials, test functions and their relatives, separable Hilbert space.
std::vector<SpaceCardinalities> example_table();

} // namespace hamel

#endif
