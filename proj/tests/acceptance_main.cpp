// Acceptance suite: one line per criterion, every value exact, every budget
// enforced. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hamel/cardinal.hpp"
#include "hamel/diffop.hpp"
#include "hamel/functional.hpp"
#include "hamel/operators.hpp"

using namespace hamel;

namespace {

const FieldTag Q = FieldTag::Q();
const FieldTag Qi = FieldTag::Qi();

Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

using Rng = std::mt19937_64;

Scalar rand_scalar(Rng& rng, const FieldTag& field, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    for (;;) {
        Scalar s = field.kind == FieldKind::GaussianRational
                       ? Scalar::gaussian(mpq_class(num(rng), den(rng)),
                                          mpq_class(num(rng), den(rng)))
                       : Scalar::rational(mpq_class(num(rng), den(rng)));
        if (!nonzero || !s.is_zero()) return s;
    }
}

Functional rand_functional(Rng& rng, const FieldTag& field, std::uint32_t dims,
                           std::uint32_t horizon) {
    Functional f(dims, horizon, field);
    for (const auto& m : monomials_up_to(dims, horizon)) f.set(m, rand_scalar(rng, field));
    return f;
}

struct Harness {
    int failed = 0;
    int index = 0;

    void run(const char* what, double budget_seconds, bool (*fn)()) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [exception: ") + e.what() + "]";
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < budget_seconds;
        if (!(ok && in_budget)) ++failed;
        std::printf("[%2d] %s  %-58s (%.3f s, budget %.1f s)%s\n", index,
                    ok && in_budget ? "PASS" : "FAIL", what, elapsed, budget_seconds,
                    note.c_str());
        std::fflush(stdout);
    }
};

// 1. Lewy transpose identity, exact term-map equality.
bool lewy_transpose() {
    DiffOp lewy = parse_diffop("d1 + i*d2 - 2*i*(x1+i*x2)*d3", 3);
    return transpose(lewy) == -lewy;
}

// 2. Constant-coefficient transpose formula on 100 random operators.
bool constant_coefficient_transpose() {
    Rng rng(20240501);
    for (int t = 0; t < 100; ++t) {
        std::uint32_t dims = 1 + (t % 3);
        auto alphas = monomials_up_to(dims, 4);
        std::uniform_int_distribution<std::size_t> pick(0, alphas.size() - 1);
        std::uniform_int_distribution<int> nterms(1, 6);
        DiffOp p(dims, Qi);
        DiffOp expect(dims, Qi);
        int n = nterms(rng);
        for (int j = 0; j < n; ++j) {
            const MultiIndex& a = alphas[pick(rng)];
            Scalar c = rand_scalar(rng, Qi);
            p.add_term(MultiIndex(dims, 0), a, c);
            Scalar sign = total_degree(a) % 2 == 0 ? Scalar::one(Qi) : -Scalar::one(Qi);
            expect.add_term(MultiIndex(dims, 0), a, sign * c);
        }
        if (!(transpose(p) == expect)) return false;
    }
    return true;
}

// 3. Non-regular rotation: transpose = -P* and kernel witness x1^2 + x2^2.
bool rotation_report() {
    DiffOp rot = parse_diffop("x1*d2 - x2*d1", 2);
    RegularityReport rep = regularity_report(rot, 4);
    if (!(rep.transposed == -rot)) return false;
    if (rep.probe.injective) return false;
    FinSuppVec r2(Q);
    r2.set(Index::tuple({2, 0}), q(1)).set(Index::tuple({0, 2}), q(1));
    return rep.probe.witness == r2;
}

// 4. Surjective-dual roundtrip on 200 random injective-by-construction
// graded operators, one and two variables, N = 12.
bool surjective_dual_roundtrip() {
    constexpr std::uint32_t N = 12;
    constexpr int kOps = 200;
    std::vector<int> bad(kOps, 0);

#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < kOps; ++t) {
        Rng rng(7000 + static_cast<unsigned>(t));
        std::uint32_t dims = 1 + (t % 2);
        MultiIndex sigma(dims, 0);
        if (t % 3 == 1) sigma[0] = 1;
        if (t % 3 == 2) sigma[dims - 1] = 2;
        std::uint32_t shift = total_degree(sigma);

        // strictly degree-dominant diagonal: column(beta) = u x^(beta+sigma)
        // plus junk strictly below beta+sigma in the monomial order
        std::map<MultiIndex, FinSuppVec> cols;
        std::uniform_int_distribution<std::size_t> njunk(0, 3);
        for (const auto& beta : monomials_up_to(dims, N)) {
            MultiIndex top = multi_add(beta, sigma);
            FinSuppVec col(Q);
            col.set(Index::tuple(top), rand_scalar(rng, Q, true));
            auto lower = monomials_up_to(dims, total_degree(top));
            std::uniform_int_distribution<std::size_t> pick(0, lower.size() - 1);
            for (std::size_t j = njunk(rng); j > 0; --j) {
                const MultiIndex& cand = lower[pick(rng)];
                if (multi_less(cand, top)) col.set(Index::tuple(cand), rand_scalar(rng, Q));
            }
            cols.emplace(beta, std::move(col));
        }
        ColumnFiniteOperator op(dims, static_cast<int>(shift), std::move(cols),
                                ColumnFiniteOperator::Fill::Zero, Q);
        Functional rhs = rand_functional(rng, Q, dims, N);
        Functional lam = solve_dual(op, rhs, N);

        // the defining equations at every degree <= N - shift
        std::uint32_t eq_deg = N - shift;
        Functional image = dual_apply(op, lam);
        for (const auto& beta : monomials_up_to(dims, eq_deg)) {
            if (!(image.moment(beta) == rhs.moment(beta))) {
                bad[t] = 1;
                break;
            }
        }
    }
    for (int b : bad)
        if (b) return false;
    return true;
}

// 5. Fundamental solution of d+1: factorial moments, verified and
// cross-checked against the integral recurrence.
bool fundamental_solution_factorials() {
    DiffOp p = parse_diffop("d1 + 1", 1);
    Functional f = fundamental_solution(p, 20);
    // oracle: I_n = integral of x^n e^-x = n I_(n-1), I_0 = 1
    mpz_class oracle = 1;
    for (std::uint32_t n = 0; n <= 20; ++n) {
        if (n > 0) oracle *= n;
        if (!(f.moment({n}) == Scalar::from_mpz(Q, oracle))) return false;
    }
    Functional image = dual_action(p, f);
    return image.agrees_with(Functional::delta_moments(1, 19, Q), 19);
}

// 6. Convolution identities on 50 random functionals and point
// distributions of order <= 2.
bool convolution_identities() {
    Rng rng(606060);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int t = 0; t < 50; ++t) {
        std::uint32_t dims = 1 + (t % 2);
        Functional s = rand_functional(rng, Q, dims, 12);
        if (!(convolve(s, PointDistribution::delta(dims, Q)) == s)) return false;

        PointDistribution pd(dims, Q);
        auto betas = monomials_up_to(dims, 2);
        std::uniform_int_distribution<std::size_t> pick(0, betas.size() - 1);
        for (int a = 0; a < 2; ++a) {
            std::vector<mpq_class> pt(dims);
            for (auto& c : pt) c = mpq_class(coord(rng));
            pd.add(pt, betas[pick(rng)], rand_scalar(rng, Q));
        }
        MultiIndex e(dims, 0);
        e[t % dims] = 1;
        Functional lhs = derivative(e, convolve(s, pd));
        Functional mid = convolve(derivative(e, s), pd);
        Functional rhs = convolve(s, pd.derivative(e));
        if (!(lhs == mid && mid == rhs)) return false;
    }
    return true;
}

// 7. Adjointness bracket on 100 random (P, T, phi) triples.
bool adjointness_bracket() {
    Rng rng(424242);
    for (int t = 0; t < 100; ++t) {
        std::uint32_t dims = 1 + (t % 2);
        auto alphas = monomials_up_to(dims, 3);
        auto gammas = monomials_up_to(dims, 3);
        std::uniform_int_distribution<std::size_t> pa(0, alphas.size() - 1);
        std::uniform_int_distribution<std::size_t> pg(0, gammas.size() - 1);
        std::uniform_int_distribution<int> nterms(1, 4);
        DiffOp p(dims, Q);
        for (int j = nterms(rng); j > 0; --j)
            p.add_term(gammas[pg(rng)], alphas[pa(rng)], rand_scalar(rng, Q));

        Functional f = rand_functional(rng, Q, dims, 10);
        auto monos = monomials_up_to(dims, 5);
        std::uniform_int_distribution<std::size_t> pm(0, monos.size() - 1);
        Polynomial phi(dims, Q);
        for (int j = nterms(rng); j > 0; --j) phi.add_term(monos[pm(rng)], rand_scalar(rng, Q));

        Scalar lhs = eval_bracket(dual_action(p, f), phi.to_finsupp());
        Scalar rhs = eval_bracket(f, apply_poly(transpose(p), phi).to_finsupp());
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// 8. The worked cardinal table, by exact symbol match.
bool cardinal_golden_table() {
    auto table = example_table();
    auto find = [&](const char* name) -> const SpaceCardinalities* {
        for (const auto& r : table)
            if (r.name == name) return &r;
        return nullptr;
    };
    auto expect = [&](const char* name, const char* dim, const char* dual,
                      const char* ddual) {
        const auto* r = find(name);
        return r && r->dim.str() == dim && r->dim_dual.str() == dual &&
               r->card_dual.str() == dual && r->dim_double_dual.str() == ddual;
    };
    bool ok = true;
    ok &= expect("R|Q", "c", "c+", "c++");
    ok &= expect("R^N", "c", "c+", "c++");
    ok &= expect("D(Omega)", "c", "c+", "c++");
    ok &= expect("E(Omega)", "c", "c+", "c++");
    ok &= expect("D'(Omega)", "c", "c+", "c++");
    ok &= expect("H", "c", "c+", "c++");
    const auto* poly = find("C[z]");
    ok &= poly && poly->dim.str() == "aleph0" && poly->dim_dual.str() == "c" &&
          poly->card.str() == "c" && poly->card_dual.str() == "c";
    const auto* h = find("H");
    ok &= h && h->card_double_dual.str() == "c++";
    return ok;
}

// 9. Delta-sequence weak limit and the n = 1,2,3 cross-check against exact
// integration.
bool delta_sequence_weak_limit() {
    ParametricMomentFamily fam(1);
    for (std::uint32_t k = 0; k <= 10; ++k) {
        RationalFunctionN f;
        f.num.c = {mpz_class(1)};
        f.den.c.assign(k + 1, mpz_class(0));
        f.den.c[k] = mpz_class(k + 1);
        fam.set({k}, std::move(f));
    }
    auto res = weak_limit(fam, 10);
    if (!res.converged()) return false;
    if (!(*res.limit == Functional::delta_moments(1, 10, Q))) return false;

    for (unsigned long n = 1; n <= 3; ++n) {
        PiecewisePolynomial box;
        box.pieces.push_back({mpq_class(0), mpq_class(1, n), {mpq_class(n)}});
        if (!(schwartz_moments(box, 10) == fam.at(n, 10))) return false;
    }
    return true;
}

// 10. Transpose involution on 200 random operators, and the Weyl relation.
bool involution_and_weyl() {
    Rng rng(11111);
    for (int t = 0; t < 200; ++t) {
        std::uint32_t dims = 1 + (t % 3);
        FieldTag field = t % 2 ? Qi : Q;
        auto alphas = monomials_up_to(dims, 3);
        auto gammas = monomials_up_to(dims, 3);
        std::uniform_int_distribution<std::size_t> pa(0, alphas.size() - 1);
        std::uniform_int_distribution<std::size_t> pg(0, gammas.size() - 1);
        std::uniform_int_distribution<int> nterms(1, 5);
        DiffOp p(dims, field);
        for (int j = nterms(rng); j > 0; --j)
            p.add_term(gammas[pg(rng)], alphas[pa(rng)], rand_scalar(rng, field));
        if (!(transpose(transpose(p)) == p)) return false;
    }
    DiffOp weyl = parse_diffop("d1*x1") - parse_diffop("x1*d1");
    return weyl == DiffOp::constant(1, q(1));
}

} // namespace

int main() {
    Harness h;
    h.run("lewy transpose identity L = -L*", 0.1, lewy_transpose);
    h.run("constant-coefficient transpose, 100 random operators", 1.0,
          constant_coefficient_transpose);
    h.run("non-regular rotation: -P* and kernel witness x1^2+x2^2", 0.5, rotation_report);
    h.run("surjective-dual roundtrip, 200 random operators at N=12", 10.0,
          surjective_dual_roundtrip);
    h.run("fundamental solution of d+1: n! moments to degree 20", 0.5,
          fundamental_solution_factorials);
    h.run("convolution identities, 50 random functionals", 2.0, convolution_identities);
    h.run("adjointness bracket, 100 random triples", 2.0, adjointness_bracket);
    h.run("cardinal golden table", 0.1, cardinal_golden_table);
    h.run("delta-sequence weak limit and box moments", 0.5, delta_sequence_weak_limit);
    h.run("transpose involution x200 and weyl relation", 1.0, involution_and_weyl);

    if (h.failed == 0) {
        std::printf("RESULT: all %d acceptance criteria passed\n", h.index);
    } else {
        std::printf("RESULT: %d of %d acceptance criteria FAILED\n", h.failed, h.index);
    }
    return h.failed;
}
