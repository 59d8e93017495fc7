#include "hamel/diffop.hpp"

#include <algorithm>
#include <cctype>

namespace hamel {

DiffOp DiffOp::constant(std::uint32_t dims, const Scalar& c) {
    DiffOp p(dims, c.field());
    p.add_term(MultiIndex(dims, 0), MultiIndex(dims, 0), c);
    return p;
}

DiffOp DiffOp::coordinate(std::uint32_t dims, FieldTag field, std::uint32_t i) {
    if (i == 0 || i > dims) throw UnknownVariableError("x" + std::to_string(i));
    MultiIndex g(dims, 0);
    g[i - 1] = 1;
    DiffOp p(dims, field);
    p.add_term(g, MultiIndex(dims, 0), Scalar::one(field));
    return p;
}

DiffOp DiffOp::partial(std::uint32_t dims, FieldTag field, std::uint32_t i) {
    if (i == 0 || i > dims) throw UnknownVariableError("d" + std::to_string(i));
    MultiIndex a(dims, 0);
    a[i - 1] = 1;
    DiffOp p(dims, field);
    p.add_term(MultiIndex(dims, 0), a, Scalar::one(field));
    return p;
}

DiffOp DiffOp::term(std::uint32_t dims, const Scalar& c, MultiIndex gamma, MultiIndex alpha) {
    DiffOp p(dims, c.field());
    gamma.resize(dims, 0);
    alpha.resize(dims, 0);
    p.add_term(std::move(gamma), std::move(alpha), c);
    return p;
}

std::uint32_t DiffOp::order() const {
    std::uint32_t m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, total_degree(k.deriv));
    return m;
}

std::uint32_t DiffOp::coeff_degree() const {
    std::uint32_t m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, total_degree(k.coeff_deg));
    return m;
}

int DiffOp::degree_shift() const {
    int s = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        int d = static_cast<int>(total_degree(k.coeff_deg)) - static_cast<int>(total_degree(k.deriv));
        if (first || d > s) s = d;
        first = false;
    }
    return s;
}

DiffOp& DiffOp::add_term(MultiIndex gamma, MultiIndex alpha, const Scalar& c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) return *this;
    for (std::size_t i = dims_; i < gamma.size(); ++i)
        if (gamma[i] != 0) throw UnknownVariableError("x" + std::to_string(i + 1));
    for (std::size_t i = dims_; i < alpha.size(); ++i)
        if (alpha[i] != 0) throw UnknownVariableError("d" + std::to_string(i + 1));
    gamma.resize(dims_, 0);
    alpha.resize(dims_, 0);
    WeylKey key{std::move(gamma), std::move(alpha)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    require_same_field(a.field_, b.field_);
    DiffOp r = a;
    if (b.dims_ > r.dims_) {
        DiffOp wide(b.dims_, a.field_);
        for (const auto& [k, c] : a.terms_) wide.add_term(k.coeff_deg, k.deriv, c);
        r = wide;
    }
    for (const auto& [k, c] : b.terms_) r.add_term(k.coeff_deg, k.deriv, c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const Scalar& c, const DiffOp& p) {
    DiffOp r(p.dims_, p.field_);
    for (const auto& [k, pc] : p.terms_) r.add_term(k.coeff_deg, k.deriv, c * pc);
    return r;
}

DiffOp DiffOp::operator-() const { return -Scalar::one(field_) * *this; }

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    require_same_field(a.field_, b.field_);
    std::uint32_t dims = std::max(a.dims_, b.dims_);
    DiffOp r(dims, a.field_);
    // (x^g1 d^a1)(x^g2 d^a2): commute d^a1 past x^g2 with the closed form
    // d^a x^g = sum_{mu <= min(a,g)} C(a,mu) fall(g,mu) x^(g-mu) d^(a-mu),
    // the exhaustive application of d_j x_k = x_k d_j + delta_jk.
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            MultiIndex lim(dims, 0);
            MultiIndex a1 = ka.deriv, g2 = kb.coeff_deg;
            a1.resize(dims, 0);
            g2.resize(dims, 0);
            for (std::uint32_t i = 0; i < dims; ++i) lim[i] = std::min(a1[i], g2[i]);
            // enumerate mu <= lim entrywise
            MultiIndex mu(dims, 0);
            while (true) {
                mpz_class coef = multi_binomial(a1, mu) * falling_factorial(g2, mu);
                Scalar c = ca * cb * Scalar::from_mpz(a.field_, coef);
                MultiIndex gamma = multi_add(ka.coeff_deg, *multi_sub(g2, mu));
                MultiIndex alpha = multi_add(*multi_sub(a1, mu), kb.deriv);
                r.add_term(std::move(gamma), std::move(alpha), c);
                // next mu
                std::uint32_t i = 0;
                for (; i < dims; ++i) {
                    if (mu[i] < lim[i]) { ++mu[i]; break; }
                    mu[i] = 0;
                }
                if (i == dims) break;
            }
        }
    }
    return r;
}

DiffOp DiffOp::pow(std::uint32_t e) const {
    DiffOp r = DiffOp::constant(dims_, Scalar::one(field_));
    DiffOp base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        s += c.str();
        for (std::size_t i = 0; i < k.coeff_deg.size(); ++i) {
            if (k.coeff_deg[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (k.coeff_deg[i] > 1) s += "^" + std::to_string(k.coeff_deg[i]);
        }
        for (std::size_t i = 0; i < k.deriv.size(); ++i) {
            if (k.deriv[i] == 0) continue;
            s += "*d" + std::to_string(i + 1);
            if (k.deriv[i] > 1) s += "^" + std::to_string(k.deriv[i]);
        }
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Parser: precedence climbing over the token stream.

namespace {

struct Token {
    enum Kind { Number, Imag, Var, Deriv, Plus, Minus, Star, Caret, LParen, RParen, End } kind = End;
    std::size_t pos = 0;
    mpq_class value{};       // Number
    std::uint32_t index = 0; // Var/Deriv (1-based)
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        std::size_t p = pos_;
        if (pos_ >= s_.size()) return {Token::End, p};
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, p};
            case '-': ++pos_; return {Token::Minus, p};
            case '*': ++pos_; return {Token::Star, p};
            case '^': ++pos_; return {Token::Caret, p};
            case '(': ++pos_; return {Token::LParen, p};
            case ')': ++pos_; return {Token::RParen, p};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_rational(p);
        if (c == 'i') {
            ++pos_;
            return {Token::Imag, p};
        }
        if (c == 'x' || c == 'y' || c == 'z') return lex_var(p);
        if (c == 'd') return lex_deriv(p);
        throw SyntaxError(p, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::uint32_t lex_nat(std::size_t p) {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw SyntaxError(p, "expected a number");
        std::uint64_t n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            if (n > 0xffffffffull) throw SyntaxError(p, "index too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(n);
    }

    Token lex_rational(std::size_t p) {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        mpq_class q{mpz_class(digits)};
        if (pos_ < s_.size() && s_[pos_] == '/') {
            // only a denominator if digits follow; otherwise leave '/' alone
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                std::string den;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    den += s_[pos_++];
                mpz_class d(den);
                if (d == 0) throw SyntaxError(save, "zero denominator");
                q /= mpq_class(d);
            } else {
                throw SyntaxError(save, "expected a denominator");
            }
        }
        q.canonicalize();
        Token t{Token::Number, p};
        t.value = q;
        return t;
    }

    // var := 'x' nat | 'x' | 'y' | 'z'  (y,z alias x2,x3)
    Token lex_var(std::size_t p) {
        char c = s_[pos_++];
        Token t{Token::Var, p};
        if (c == 'y') { t.index = 2; return t; }
        if (c == 'z') { t.index = 3; return t; }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            t.index = lex_nat(p);
            if (t.index == 0) throw SyntaxError(p, "variable indices start at 1");
        } else {
            t.index = 1;
        }
        return t;
    }

    // deriv := 'd' nat | 'd' var
    Token lex_deriv(std::size_t p) {
        ++pos_; // consume 'd'
        Token t{Token::Deriv, p};
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            t.index = lex_nat(p);
            if (t.index == 0) throw SyntaxError(p, "derivative indices start at 1");
            return t;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y' || s_[pos_] == 'z')) {
            Token v = lex_var(p + 1);
            t.index = v.index;
            return t;
        }
        throw SyntaxError(p, "expected a variable after 'd'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, std::uint32_t dims, FieldTag field)
        : lexer_(text), dims_(dims), field_(field) {
        advance();
    }

    DiffOp parse() {
        DiffOp e = expr();
        expect(Token::End, "trailing input");
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k) throw SyntaxError(cur_.pos, what);
    }

    DiffOp expr() {
        bool neg = false;
        if (cur_.kind == Token::Minus) { neg = true; advance(); }
        DiffOp acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            advance();
            DiffOp t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    DiffOp term() {
        DiffOp acc = factor();
        while (cur_.kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    DiffOp factor() {
        DiffOp f = primary();
        while (cur_.kind == Token::Caret) {
            std::size_t p = cur_.pos;
            advance();
            if (cur_.kind != Token::Number || cur_.value.get_den() != 1 || cur_.value < 0)
                throw SyntaxError(p, "exponent must be a natural number");
            unsigned long e = cur_.value.get_num().get_ui();
            advance();
            f = f.pow(static_cast<std::uint32_t>(e));
        }
        return f;
    }

    DiffOp primary() {
        switch (cur_.kind) {
            case Token::Number: {
                Scalar c = Scalar::from_mpq(field_, cur_.value);
                advance();
                return DiffOp::constant(dims_, c);
            }
            case Token::Imag: {
                if (field_.kind != FieldKind::GaussianRational)
                    throw SyntaxError(cur_.pos, "'i' needs the Qi field");
                advance();
                return DiffOp::constant(dims_, Scalar::gaussian(mpq_class(0), mpq_class(1)));
            }
            case Token::Var: {
                if (cur_.index > dims_) throw UnknownVariableError("x" + std::to_string(cur_.index));
                DiffOp v = DiffOp::coordinate(dims_, field_, cur_.index);
                advance();
                return v;
            }
            case Token::Deriv: {
                if (cur_.index > dims_) throw UnknownVariableError("d" + std::to_string(cur_.index));
                DiffOp v = DiffOp::partial(dims_, field_, cur_.index);
                advance();
                return v;
            }
            case Token::Minus: {
                // unary minus inside a factor, e.g. "2*-3" is rejected but
                // "-(...)" after '(' goes through expr(); keep strict here.
                throw SyntaxError(cur_.pos, "unexpected '-'");
            }
            case Token::LParen: {
                advance();
                DiffOp e = expr();
                expect(Token::RParen, "expected ')'");
                advance();
                return e;
            }
            default: throw SyntaxError(cur_.pos, "expected a factor");
        }
    }

    Lexer lexer_;
    Token cur_;
    std::uint32_t dims_;
    FieldTag field_;
};

// Pre-scan for dims/field inference: the largest variable index used and
// whether the literal 'i' occurs.
void scan_text(const std::string& s, std::uint32_t& max_var, bool& has_imag) {
    Lexer lex(s);
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
        if (t.kind == Token::Var || t.kind == Token::Deriv) max_var = std::max(max_var, t.index);
        if (t.kind == Token::Imag) has_imag = true;
    }
}

} // namespace

DiffOp parse_diffop(const std::string& text, std::optional<std::uint32_t> dims,
                    std::optional<FieldTag> field) {
    std::uint32_t max_var = 1;
    bool has_imag = false;
    scan_text(text, max_var, has_imag);
    std::uint32_t d = dims.value_or(max_var);
    FieldTag f = field.value_or(has_imag ? FieldTag::Qi() : FieldTag::Q());
    Parser p(text, d, f);
    return p.parse();
}

DiffOp transpose(const DiffOp& p) {
    DiffOp r(p.dims(), p.field());
    for (const auto& [k, c] : p.terms()) {
        // c x^g d^a  |->  (-1)^|a| d^a (x^g .), normally ordered.
        Scalar sign = total_degree(k.deriv) % 2 == 0 ? Scalar::one(p.field()) : -Scalar::one(p.field());
        DiffOp da = DiffOp::term(p.dims(), sign * c, MultiIndex(p.dims(), 0), k.deriv);
        DiffOp xg = DiffOp::term(p.dims(), Scalar::one(p.field()), k.coeff_deg, MultiIndex(p.dims(), 0));
        r = r + da * xg;
    }
    return r;
}

Polynomial apply_poly(const DiffOp& p, const Polynomial& f) {
    require_same_field(p.field(), f.field());
    std::uint32_t dims = std::max(p.dims(), f.dims());
    Polynomial out(dims, p.field());
    for (const auto& [k, c] : p.terms()) {
        Polynomial d = f.derivative(k.deriv);
        if (d.is_zero()) continue;
        out = out + Polynomial::monomial(dims, k.coeff_deg, c) * d;
    }
    return out;
}

ColumnFiniteOperator as_operator_on_polys(const DiffOp& p) {
    const std::uint32_t dims = p.dims();
    const FieldTag field = p.field();
    DiffOp copy = p;
    auto gen = [copy, dims, field](const MultiIndex& beta) {
        Polynomial mono = Polynomial::monomial(dims, beta, Scalar::one(field));
        return apply_poly(copy, mono).to_finsupp();
    };
    return ColumnFiniteOperator::from_generator(dims, p.degree_shift(), gen, field);
}

Functional dual_action(const DiffOp& p_star, const Functional& t) {
    require_same_field(p_star.field(), t.field());
    std::uint32_t out_h = t.horizon();
    if (!t.unbounded()) {
        std::uint32_t g = p_star.coeff_degree();
        if (t.horizon() < g) throw HorizonExceededError(g, t.horizon());
        out_h = t.horizon() - g;
    }
    Functional acc = Functional::zero(t.dims(), out_h, t.field());
    for (const auto& [k, c] : p_star.terms()) {
        Functional part = derivative(k.deriv, t);
        Polynomial mono = Polynomial::monomial(p_star.dims(), k.coeff_deg, c);
        part = poly_multiply(mono, part);
        acc = acc + part.truncated(out_h);
    }
    acc.rename("dual_action");
    return acc;
}

std::string operator_class_name(OperatorClass c) {
    switch (c) {
        case OperatorClass::ConstantCoefficientsNonzero: return "constant_coefficients_nonzero";
        case OperatorClass::SelfTransposeNegation: return "self_transpose_negation";
        case OperatorClass::Unclassified: return "unclassified";
    }
    return "?";
}

RegularityReport regularity_report(const DiffOp& p_star, std::uint32_t n) {
    RegularityReport rep{transpose(p_star), {}, OperatorClass::Unclassified, n};

    bool constant = !p_star.is_zero();
    for (const auto& [k, c] : p_star.terms())
        if (total_degree(k.coeff_deg) > 0) constant = false;
    if (constant) {
        rep.classification = OperatorClass::ConstantCoefficientsNonzero;
    } else if (rep.transposed == -p_star) {
        rep.classification = OperatorClass::SelfTransposeNegation;
    }

    rep.probe = injectivity_probe(as_operator_on_polys(rep.transposed), n);
    return rep;
}

Functional fundamental_solution(const DiffOp& p_star, std::uint32_t n) {
    DiffOp t = transpose(p_star);
    Functional delta = Functional::delta_moments(p_star.dims(), n, p_star.field());
    Functional f = solve_dual(as_operator_on_polys(t), delta, n);
    f.rename("fundamental_solution");
    return f;
}

// ---------------------------------------------------------------------------
// Point-supported distributions and convolution.

bool PointDistribution::AtomLess::operator()(const Atom& a, const Atom& b) const {
    if (a.point.size() != b.point.size()) return a.point.size() < b.point.size();
    for (std::size_t i = 0; i < a.point.size(); ++i) {
        int c = cmp(a.point[i], b.point[i]);
        if (c != 0) return c < 0;
    }
    return multi_less(a.beta, b.beta);
}

PointDistribution PointDistribution::delta(std::uint32_t dims, FieldTag field) {
    PointDistribution d(dims, field);
    d.add(std::vector<mpq_class>(dims, mpq_class(0)), MultiIndex(dims, 0), Scalar::one(field));
    return d;
}

PointDistribution& PointDistribution::add(std::vector<mpq_class> point, MultiIndex beta,
                                          const Scalar& c) {
    require_same_field(field_, c.field());
    if (c.is_zero()) return *this;
    for (std::size_t i = dims_; i < point.size(); ++i)
        if (point[i] != 0) throw Error("point coordinate outside the declared variables");
    for (std::size_t i = dims_; i < beta.size(); ++i)
        if (beta[i] != 0) throw Error("derivative order outside the declared variables");
    point.resize(dims_, mpq_class(0));
    beta.resize(dims_, 0);
    Atom a{std::move(point), std::move(beta)};
    auto it = atoms_.find(a);
    if (it == atoms_.end()) {
        atoms_.emplace(std::move(a), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) atoms_.erase(it);
    }
    return *this;
}

std::uint32_t PointDistribution::order() const {
    std::uint32_t m = 0;
    for (const auto& [a, c] : atoms_) m = std::max(m, total_degree(a.beta));
    return m;
}

std::vector<PointDistribution::Entry> PointDistribution::entries() const {
    std::vector<Entry> out;
    out.reserve(atoms_.size());
    for (const auto& [a, c] : atoms_) out.push_back({a, c});
    return out;
}

PointDistribution PointDistribution::derivative(const MultiIndex& alpha) const {
    PointDistribution out(dims_, field_);
    for (const auto& [a, c] : atoms_) out.add(a.point, multi_add(a.beta, alpha), c);
    return out;
}

Polynomial PointDistribution::reflected_convolve(const Polynomial& f) const {
    // (d^beta delta_a)-check = (-1)^|beta| d^beta delta_{-a}, and
    // (d^beta delta_c * f)(x) = (d^beta f)(x - c); with c = -a this is
    // (d^beta f)(x + a).
    Polynomial out(dims_, field_);
    for (const auto& [a, c] : atoms_) {
        Polynomial g = f.derivative(a.beta);
        std::vector<Scalar> shift;
        shift.reserve(dims_);
        for (const auto& q : a.point) shift.push_back(Scalar::from_mpq(field_, q));
        g = g.shifted(shift);
        Scalar sign = total_degree(a.beta) % 2 == 0 ? Scalar::one(field_) : -Scalar::one(field_);
        out = out + (sign * c) * g;
    }
    return out;
}

Functional convolve(const Functional& s, const PointDistribution& t) {
    require_same_field(s.field(), t.field());
    if (s.unbounded()) throw Error("convolve needs a finite horizon; truncate the functional first");
    Functional out(s.dims(), s.horizon(), s.field());
    for (const auto& gamma : monomials_up_to(s.dims(), s.horizon())) {
        Polynomial mono = Polynomial::monomial(s.dims(), gamma, Scalar::one(s.field()));
        Polynomial conv = t.reflected_convolve(mono);
        out.set(gamma, eval_bracket(s, conv.to_finsupp()));
    }
    out.rename("convolve");
    return out;
}

} // namespace hamel
