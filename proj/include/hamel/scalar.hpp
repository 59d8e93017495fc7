#ifndef HAMEL_SCALAR_HPP
#define HAMEL_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hamel/errors.hpp"

namespace hamel {

enum class FieldKind { Rational, GaussianRational, PrimeField };

/// Identifies the field a value lives in. Prime-field tags carry the modulus.
struct FieldTag {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t modulus = 0;

    static FieldTag Q() { return {FieldKind::Rational, 0}; }
    static FieldTag Qi() { return {FieldKind::GaussianRational, 0}; }
    static FieldTag GF(std::uint64_t p); // checks primality

    bool operator==(const FieldTag&) const = default;

    std::string name() const;                     // "Q", "Qi", "GF(5)"
    static FieldTag parse(const std::string& s);  // accepts "GF(5)" and "GF:5"
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// An exact field element: a rational, a Gaussian rational, or a residue
/// modulo a prime. Rationals are always kept in lowest terms with positive
/// denominator (mpq canonical form). Conjugation on Q and GF(p) is the
/// identity; on Q(i) it negates the imaginary part.
class Scalar {
public:
    struct Gaussian {
        mpq_class re, im;
        bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    };
    struct Residue {
        std::uint64_t value, modulus;
        bool operator==(const Residue&) const = default;
    };

    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const FieldTag& f) { return integer(f, 0); }
    static Scalar one(const FieldTag& f) { return integer(f, 1); }
    static Scalar integer(const FieldTag& f, long n);
    static Scalar from_mpz(const FieldTag& f, const mpz_class& n);
    static Scalar from_mpq(const FieldTag& f, const mpq_class& q);
    static Scalar rational(mpq_class q);
    static Scalar gaussian(mpq_class re, mpq_class im);
    static Scalar residue(std::uint64_t value, std::uint64_t prime_modulus);

    FieldTag field() const;
    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const;
    Scalar conj() const;
    Scalar inverse() const; // throws DivisionByZeroError on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(std::uint32_t e) const;

    // Accessors; each requires the matching field kind.
    const mpq_class& rat() const;
    const mpq_class& re() const;
    const mpq_class& im() const;
    std::uint64_t residue_value() const;

    /// "p/q" for rationals, "a/b+c/di" for Gaussian rationals (real part kept
    /// even when zero, imaginary part dropped when zero), decimal residue for
    /// prime fields.
    std::string str() const;
    static Scalar parse(const FieldTag& f, const std::string& s);

private:
    std::variant<mpq_class, Gaussian, Residue> v_;
};

/// Strict check used by every binary operation.
void require_same_field(const FieldTag& a, const FieldTag& b);

} // namespace hamel

#endif
