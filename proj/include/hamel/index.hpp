#ifndef HAMEL_INDEX_HPP
#define HAMEL_INDEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hamel {

/// Exponent tuple of a monomial x1^a1 ... xd^ad.
using MultiIndex = std::vector<std::uint32_t>;

std::uint32_t total_degree(const MultiIndex& m);
MultiIndex multi_add(const MultiIndex& a, const MultiIndex& b);
/// Entrywise difference; empty optional when some entry would go negative.
std::optional<MultiIndex> multi_sub(const MultiIndex& a, const MultiIndex& b);

/// The frozen graded order on exponent tuples: total degree first; within a
/// degree, the monomial with the larger exponent at the earliest differing
/// variable comes first. One variable: 1, z, z^2, ...; two variables:
/// 1, x1, x2, x1^2, x1*x2, x2^2, x1^3, ...
bool multi_less(const MultiIndex& a, const MultiIndex& b);

/// All exponent tuples of the given total degree, in multi_less order.
std::vector<MultiIndex> monomials_of_degree(std::uint32_t dims, std::uint32_t degree);
/// All exponent tuples of total degree <= max_degree, in multi_less order.
std::vector<MultiIndex> monomials_up_to(std::uint32_t dims, std::uint32_t max_degree);

std::string multi_str(const MultiIndex& m);

/// A basis label: a named atom or an exponent tuple. The total order is
/// deterministic and frozen: all atoms precede all tuples; atoms compare
/// lexicographically by name; tuples compare by multi_less.
class Index {
public:
    static Index atom(std::string name);
    static Index tuple(MultiIndex t);

    bool is_atom() const { return std::holds_alternative<std::string>(v_); }
    bool is_tuple() const { return std::holds_alternative<MultiIndex>(v_); }
    const std::string& atom_name() const { return std::get<std::string>(v_); }
    const MultiIndex& tuple_value() const { return std::get<MultiIndex>(v_); }

    bool operator==(const Index&) const = default;
    bool operator<(const Index& o) const;

    std::string str() const;

private:
    std::variant<std::string, MultiIndex> v_;
};

} // namespace hamel

#endif
