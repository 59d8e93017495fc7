#include "hamel/scalar.hpp"

#include <array>
#include <cctype>

namespace hamel {

namespace {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

mpq_class parse_mpq(const std::string& s) {
    // Strict form: '-'? digits ('/' digits)? with a positive denominator.
    if (s.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) throw Error("malformed rational literal: " + s);
    if (i < s.size()) {
        if (s[i] != '/') throw Error("malformed rational literal: " + s);
        ++i;
        std::size_t den_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != s.size()) throw Error("malformed rational literal: " + s);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) throw Error("malformed rational literal: " + s);
    if (q.get_den() == 0) throw DivisionByZeroError();
    q.canonicalize();
    return q;
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldTag FieldTag::GF(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("GF modulus is not prime: " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::string FieldTag::name() const {
    switch (kind) {
        case FieldKind::Rational: return "Q";
        case FieldKind::GaussianRational: return "Qi";
        case FieldKind::PrimeField: return "GF(" + std::to_string(modulus) + ")";
    }
    return "?";
}

FieldTag FieldTag::parse(const std::string& s) {
    if (s == "Q") return Q();
    if (s == "Qi") return Qi();
    std::string digits;
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
        digits = s.substr(3, s.size() - 4);
    } else if (s.rfind("GF:", 0) == 0) {
        digits = s.substr(3);
    } else {
        throw Error("unknown field: " + s);
    }
    if (digits.empty()) throw Error("unknown field: " + s);
    std::uint64_t p = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("unknown field: " + s);
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return GF(p);
}

Scalar Scalar::integer(const FieldTag& f, long n) {
    switch (f.kind) {
        case FieldKind::Rational: return rational(mpq_class(n));
        case FieldKind::GaussianRational: return gaussian(mpq_class(n), mpq_class(0));
        case FieldKind::PrimeField:
            return from_mpz(f, mpz_class(n));
    }
    throw Error("bad field tag");
}

Scalar Scalar::from_mpz(const FieldTag& f, const mpz_class& n) {
    switch (f.kind) {
        case FieldKind::Rational: return rational(mpq_class(n));
        case FieldKind::GaussianRational: return gaussian(mpq_class(n), mpq_class(0));
        case FieldKind::PrimeField: {
            mpz_class p(static_cast<unsigned long>(f.modulus));
            mpz_class r = ((n % p) + p) % p;
            return residue(static_cast<std::uint64_t>(r.get_ui()), f.modulus);
        }
    }
    throw Error("bad field tag");
}

Scalar Scalar::from_mpq(const FieldTag& f, const mpq_class& q) {
    switch (f.kind) {
        case FieldKind::Rational: return rational(q);
        case FieldKind::GaussianRational: return gaussian(q, mpq_class(0));
        case FieldKind::PrimeField: {
            Scalar num = from_mpz(f, q.get_num());
            Scalar den = from_mpz(f, q.get_den());
            return num / den;
        }
    }
    throw Error("bad field tag");
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::gaussian(mpq_class re, mpq_class im) {
    re.canonicalize();
    im.canonicalize();
    Scalar s;
    s.v_ = Gaussian{std::move(re), std::move(im)};
    return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t prime_modulus) {
    if (!is_prime_u64(prime_modulus))
        throw Error("GF modulus is not prime: " + std::to_string(prime_modulus));
    Scalar s;
    s.v_ = Residue{value % prime_modulus, prime_modulus};
    return s;
}

FieldTag Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return FieldTag::Q();
    if (std::holds_alternative<Gaussian>(v_)) return FieldTag::Qi();
    return {FieldKind::PrimeField, std::get<Residue>(v_).modulus};
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
    if (const auto* g = std::get_if<Gaussian>(&v_)) return g->re == 0 && g->im == 0;
    return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const { return *this == one(field()); }

void require_same_field(const FieldTag& a, const FieldTag& b) {
    if (!(a == b)) throw MixedFieldsError("mixed fields: " + a.name() + " vs " + b.name());
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return rational(-*q);
    if (const auto* g = std::get_if<Gaussian>(&v_)) return gaussian(-g->re, -g->im);
    const auto& r = std::get<Residue>(v_);
    return residue(submod(0, r.value, r.modulus), r.modulus);
}

Scalar Scalar::conj() const {
    if (const auto* g = std::get_if<Gaussian>(&v_)) return gaussian(g->re, -g->im);
    return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field(), b.field());
    if (const auto* q = std::get_if<mpq_class>(&a.v_))
        return Scalar::rational(*q + std::get<mpq_class>(b.v_));
    if (const auto* g = std::get_if<Scalar::Gaussian>(&a.v_)) {
        const auto& h = std::get<Scalar::Gaussian>(b.v_);
        return Scalar::gaussian(g->re + h.re, g->im + h.im);
    }
    const auto& r = std::get<Scalar::Residue>(a.v_);
    const auto& s = std::get<Scalar::Residue>(b.v_);
    return Scalar::residue(addmod(r.value, s.value, r.modulus), r.modulus);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field(), b.field());
    if (const auto* q = std::get_if<mpq_class>(&a.v_))
        return Scalar::rational(*q * std::get<mpq_class>(b.v_));
    if (const auto* g = std::get_if<Scalar::Gaussian>(&a.v_)) {
        const auto& h = std::get<Scalar::Gaussian>(b.v_);
        return Scalar::gaussian(g->re * h.re - g->im * h.im, g->re * h.im + g->im * h.re);
    }
    const auto& r = std::get<Scalar::Residue>(a.v_);
    const auto& s = std::get<Scalar::Residue>(b.v_);
    return Scalar::residue(mulmod(r.value, s.value, r.modulus), r.modulus);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (const auto* q = std::get_if<mpq_class>(&v_)) return rational(1 / *q);
    if (const auto* g = std::get_if<Gaussian>(&v_)) {
        mpq_class n = g->re * g->re + g->im * g->im;
        return gaussian(g->re / n, -g->im / n);
    }
    const auto& r = std::get<Residue>(v_);
    return residue(powmod(r.value, r.modulus - 2, r.modulus), r.modulus);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(std::uint32_t e) const {
    Scalar r = one(field());
    Scalar base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

const mpq_class& Scalar::rat() const { return std::get<mpq_class>(v_); }
const mpq_class& Scalar::re() const { return std::get<Gaussian>(v_).re; }
const mpq_class& Scalar::im() const { return std::get<Gaussian>(v_).im; }
std::uint64_t Scalar::residue_value() const { return std::get<Residue>(v_).value; }

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return mpq_str(*q);
    if (const auto* g = std::get_if<Gaussian>(&v_)) {
        if (g->im == 0) return mpq_str(g->re);
        mpq_class mag = abs(g->im);
        return mpq_str(g->re) + (g->im < 0 ? "-" : "+") + mpq_str(mag) + "i";
    }
    return std::to_string(std::get<Residue>(v_).value);
}

Scalar Scalar::parse(const FieldTag& f, const std::string& s) {
    switch (f.kind) {
        case FieldKind::Rational:
            return rational(parse_mpq(s));
        case FieldKind::PrimeField: {
            if (s.empty()) throw Error("empty residue literal");
            mpz_class n;
            std::string body = s;
            bool neg = false;
            if (body[0] == '-') { neg = true; body = body.substr(1); }
            for (char c : body)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw Error("malformed residue literal: " + s);
            if (body.empty()) throw Error("malformed residue literal: " + s);
            n = mpz_class(body);
            if (neg) n = -n;
            return from_mpz(f, n);
        }
        case FieldKind::GaussianRational: {
            if (s.empty()) throw Error("empty scalar literal");
            // Split "re±imi"; the sign separating the parts is the first
            // '+'/'-' that is neither leading nor part of "/d".
            std::size_t split = std::string::npos;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
                    split = i;
                    break;
                }
            }
            auto parse_im = [](std::string t) -> mpq_class {
                // t ends with 'i'; bare "i"/"-i" mean 1/-1.
                t.pop_back();
                if (t.empty() || t == "+") return mpq_class(1);
                if (t == "-") return mpq_class(-1);
                if (t[0] == '+') t = t.substr(1);
                return parse_mpq(t);
            };
            if (split == std::string::npos) {
                if (s.back() == 'i') return gaussian(mpq_class(0), parse_im(s));
                return gaussian(parse_mpq(s), mpq_class(0));
            }
            std::string head = s.substr(0, split);
            std::string tail = s.substr(split);
            if (tail.back() != 'i') throw Error("malformed Gaussian literal: " + s);
            return gaussian(parse_mpq(head), parse_im(tail));
        }
    }
    throw Error("bad field tag");
}

} // namespace hamel
