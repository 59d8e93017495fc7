#include <doctest.h>

#include "hamel/operators.hpp"
#include "test_util.hpp"

using namespace hamel;

namespace {
const FieldTag Q = FieldTag::Q();
Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

// z^n -> z^(n+1), one variable, shift +1
ColumnFiniteOperator shift_op(std::uint32_t up_to) {
    std::map<MultiIndex, FinSuppVec> cols;
    for (std::uint32_t n = 0; n <= up_to; ++n)
        cols.emplace(MultiIndex{n}, basis_vector(MultiIndex{n + 1}, Q));
    return {1, +1, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q};
}

// z^n -> n z^(n-1), one variable, shift -1
ColumnFiniteOperator ddz_op(std::uint32_t up_to) {
    std::map<MultiIndex, FinSuppVec> cols;
    for (std::uint32_t n = 0; n <= up_to; ++n) {
        FinSuppVec c(Q);
        if (n > 0) c.set(Index::tuple({n - 1}), q(n));
        cols.emplace(MultiIndex{n}, std::move(c));
    }
    return {1, -1, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q};
}

// z^n -> z^n + n z^(n-1) (d/dz + 1), shift 0
ColumnFiniteOperator ddz_plus_one(std::uint32_t up_to) {
    std::map<MultiIndex, FinSuppVec> cols;
    for (std::uint32_t n = 0; n <= up_to; ++n) {
        FinSuppVec c = basis_vector(MultiIndex{n}, Q);
        if (n > 0) c.set(Index::tuple({n - 1}), q(n));
        cols.emplace(MultiIndex{n}, std::move(c));
    }
    return {1, 0, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q};
}

// random graded operator with a strictly degree-dominant diagonal:
// column(beta) = u * x^(beta+sigma) + junk strictly below beta+sigma.
ColumnFiniteOperator random_injective_op(testutil::Rng& rng, std::uint32_t dims,
                                         std::uint32_t up_to, const MultiIndex& sigma) {
    std::map<MultiIndex, FinSuppVec> cols;
    auto monos = monomials_up_to(dims, up_to);
    std::uniform_int_distribution<std::size_t> njunk(0, 3);
    for (const auto& beta : monos) {
        MultiIndex top = multi_add(beta, sigma);
        FinSuppVec col(Q);
        col.set(Index::tuple(top), testutil::random_scalar(rng, Q, /*nonzero=*/true));
        auto lower = monomials_up_to(dims, total_degree(top));
        std::size_t k = njunk(rng);
        std::uniform_int_distribution<std::size_t> pick(0, lower.size() - 1);
        for (std::size_t j = 0; j < k; ++j) {
            const MultiIndex& cand = lower[pick(rng)];
            if (multi_less(cand, top))
                col.set(Index::tuple(cand), testutil::random_scalar(rng, Q));
        }
        cols.emplace(beta, std::move(col));
    }
    return {dims, static_cast<int>(total_degree(sigma)), std::move(cols),
            ColumnFiniteOperator::Fill::Zero, Q};
}
} // namespace

TEST_CASE("apply_examples") {
    auto id = ColumnFiniteOperator::identity(1, Q);
    FinSuppVec v = basis_vector(MultiIndex{0}, Q) + basis_vector(MultiIndex{1}, Q);
    CHECK(apply(id, v) == v);

    // z^n -> z^(n+1) applied to 1 + z gives z + z^2
    auto mz = shift_op(6);
    FinSuppVec expect = basis_vector(MultiIndex{1}, Q) + basis_vector(MultiIndex{2}, Q);
    CHECK(apply(mz, v) == expect);

    // d/dz applied to z^3 gives 3 z^2
    auto d = ddz_op(6);
    FinSuppVec dz3 = apply(d, basis_vector(MultiIndex{3}, Q));
    CHECK(dz3.coeff(Index::tuple({2})) == q(3));
    CHECK(dz3.support_size() == 1);
}

TEST_CASE("degree_bound_is_certified_lazily") {
    std::map<MultiIndex, FinSuppVec> cols;
    cols.emplace(MultiIndex{0}, basis_vector(MultiIndex{2}, Q)); // degree 2 from degree 0
    ColumnFiniteOperator bad(1, +1, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q);
    CHECK_THROWS_AS(apply(bad, basis_vector(MultiIndex{0}, Q)), DegreeBoundViolatedError);
    // untouched columns are never checked
    CHECK_NOTHROW(apply(bad, basis_vector(MultiIndex{1}, Q)));
    // eager certification sweeps a whole degree window
    CHECK_THROWS_AS(bad.certify_up_to(3), DegreeBoundViolatedError);
    CHECK(ddz_plus_one(6).certify_up_to(6) == 6);
}

TEST_CASE("dual_action_keeps_unbounded_horizons") {
    // a restricted-dual functional stays finitely supported under the module
    // operations, so its unbounded horizon survives
    Functional phi = restricted_dual_embed(basis_vector(MultiIndex{3}, Q), 1);
    Functional d = derivative({1}, phi);
    CHECK(d.unbounded());
    CHECK(d.moment({4}) == q(-4)); // <d phi_3, z^4> = -4 <phi_3, z^3>
    CHECK(d.moment({50}).is_zero());

    Polynomial x = Polynomial::monomial(1, {1}, q(1));
    Functional xt = poly_multiply(x, phi);
    CHECK(xt.unbounded());
    CHECK(xt.moment({2}).is_one());
}

TEST_CASE("dual_apply_examples") {
    testutil::Rng rng(11);
    Functional t = testutil::random_functional(rng, Q, 1, 9);

    // multiplication by z: moments shift down
    auto mz = shift_op(9);
    Functional mt = dual_apply(mz, t);
    CHECK(mt.horizon() == 8);
    for (std::uint32_t n = 0; n <= 8; ++n) CHECK(mt.moment({n}) == t.moment({n + 1}));

    auto id = ColumnFiniteOperator::identity(1, Q);
    CHECK(dual_apply(id, t) == t.truncated(9));

    // d/dz: (O* T)(z^n) = n m_(n-1)
    auto d = ddz_op(9);
    Functional dt = dual_apply(d, t);
    CHECK(dt.horizon() == 9);
    CHECK(dt.moment({0}).is_zero());
    for (std::uint32_t n = 1; n <= 9; ++n) CHECK(dt.moment({n}) == q(n) * t.moment({n - 1}));
}

TEST_CASE("adjointness_bracket_identity") {
    testutil::Rng rng(21);
    std::vector<Index> universe;
    for (auto& m : monomials_up_to(1, 6)) universe.push_back(Index::tuple(m));
    for (int t = 0; t < 40; ++t) {
        auto op = random_injective_op(rng, 1, 8, MultiIndex{1});
        Functional f = testutil::random_functional(rng, Q, 1, 9);
        FinSuppVec v = testutil::random_vector(rng, Q, universe, 4);
        // <O* T, v> = <T, O v>
        CHECK(eval_bracket(dual_apply(op, f), v) == eval_bracket(f, apply(op, v)));
    }
}

TEST_CASE("injectivity_probe_examples") {
    auto d = ddz_op(12);
    auto cert = injectivity_probe(d, 3);
    REQUIRE_FALSE(cert.injective);
    CHECK(cert.witness == basis_vector(MultiIndex{0}, Q)); // the constants

    auto d1 = ddz_plus_one(12);
    auto cert2 = injectivity_probe(d1, 10);
    CHECK(cert2.injective);
    CHECK(cert2.checked_up_to == 10);
}

TEST_CASE("kernel_witness_is_sound") {
    testutil::Rng rng(919);
    for (int t = 0; t < 20; ++t) {
        // operator with a planted kernel: columns of a projection-like map
        std::map<MultiIndex, FinSuppVec> cols;
        for (std::uint32_t n = 0; n <= 6; ++n) {
            // kill even powers, keep odd
            FinSuppVec c(Q);
            if (n % 2 == 1) c.set(Index::tuple({n}), testutil::random_scalar(rng, Q, true));
            cols.emplace(MultiIndex{n}, std::move(c));
        }
        ColumnFiniteOperator op(1, 0, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q);
        auto cert = injectivity_probe(op, 6);
        REQUIRE_FALSE(cert.injective);
        CHECK_FALSE(cert.witness.is_zero());
        CHECK(apply(op, cert.witness).is_zero());
    }
}

TEST_CASE("solve_dual_identity_returns_rhs") {
    testutil::Rng rng(5);
    Functional t = testutil::random_functional(rng, Q, 1, 8);
    auto id = ColumnFiniteOperator::identity(1, Q);
    Functional lam = solve_dual(id, t, 8);
    CHECK(lam == t.truncated(8));
}

TEST_CASE("solve_dual_triangular_recurrence") {
    // O = d/dz + 1 with T = delta: m_n + n m_(n-1) = [n=0], so m_n = (-1)^n n!
    auto op = ddz_plus_one(12);
    Functional delta = Functional::delta_moments(1, 12, Q);
    Functional lam = solve_dual(op, delta, 12);

    // independent recurrence oracle
    std::vector<mpq_class> oracle{mpq_class(1)};
    for (std::uint32_t n = 1; n <= 12; ++n) oracle.push_back(-mpq_class(n) * oracle[n - 1]);
    for (std::uint32_t n = 0; n <= 12; ++n)
        CHECK(lam.moment({n}) == Scalar::rational(oracle[n]));
}

TEST_CASE("solve_dual_shift_operator_zero_extends") {
    // O = multiplication by z: Lambda(z^(n+1)) = T(z^n), Lambda(1) = 0
    auto mz = shift_op(12);
    testutil::Rng rng(31);
    Functional t = testutil::random_functional(rng, Q, 1, 12);
    Functional lam = solve_dual(mz, t, 12);
    CHECK(lam.moment({0}).is_zero()); // free coordinate fixed to zero
    for (std::uint32_t n = 0; n <= 11; ++n) CHECK(lam.moment({n + 1}) == t.moment({n}));
}

TEST_CASE("solve_dual_satisfies_defining_equations") {
    testutil::Rng rng(161);
    for (int t = 0; t < 25; ++t) {
        std::uint32_t dims = 1 + (t % 2);
        MultiIndex sigma(dims, 0);
        if (t % 3 == 1) sigma[0] = 1;
        if (t % 3 == 2) sigma[dims - 1] = 2;
        std::uint32_t n = 9;
        auto op = random_injective_op(rng, dims, n, sigma);
        Functional rhs = testutil::random_functional(rng, Q, dims, n);
        Functional lam = solve_dual(op, rhs, n);
        std::uint32_t eq_deg = n - total_degree(sigma);
        Functional image = dual_apply(op, lam);
        CHECK(image.agrees_with(rhs.truncated(eq_deg), eq_deg));
    }
}

TEST_CASE("solve_dual_is_deterministic") {
    testutil::Rng rng1(77), rng2(77);
    auto op1 = random_injective_op(rng1, 2, 8, MultiIndex{1, 0});
    auto op2 = random_injective_op(rng2, 2, 8, MultiIndex{1, 0});
    Functional t1 = testutil::random_functional(rng1, Q, 2, 8);
    Functional t2 = testutil::random_functional(rng2, Q, 2, 8);
    CHECK(solve_dual(op1, t1, 8) == solve_dual(op2, t2, 8));
}

TEST_CASE("solve_dual_rejects_non_injective_operators_with_witness") {
    auto d = ddz_op(12);
    Functional t = Functional::delta_moments(1, 10, Q);
    try {
        solve_dual(d, t, 10);
        FAIL("expected NotInjectiveError");
    } catch (const NotInjectiveError& e) {
        CHECK(apply(d, e.witness).is_zero());
        CHECK_FALSE(e.witness.is_zero());
        // the exhibited right-hand side pairs nontrivially with the witness
        CHECK_FALSE(eval_bracket(e.inconsistent_rhs, e.witness).is_zero());
    }
}

TEST_CASE("solver_works_over_every_field") {
    for (FieldTag field : {FieldTag::Qi(), FieldTag::GF(7), FieldTag::GF(2)}) {
        // triangular operator z^n -> z^n + n z^(n-1) over the field
        std::map<MultiIndex, FinSuppVec> cols;
        for (std::uint32_t n = 0; n <= 8; ++n) {
            FinSuppVec c = basis_vector(MultiIndex{n}, field);
            if (n > 0) c.set(Index::tuple({n - 1}), Scalar::integer(field, n));
            cols.emplace(MultiIndex{n}, std::move(c));
        }
        ColumnFiniteOperator op(1, 0, std::move(cols), ColumnFiniteOperator::Fill::Zero, field);
        auto cert = injectivity_probe(op, 8);
        if (field == FieldTag::GF(2)) {
            // in characteristic 2 the column at n = 2 is z^2 + 0, still
            // triangular, so the operator stays injective
            CHECK(cert.injective);
        }
        REQUIRE(cert.injective);
        Functional delta = Functional::delta_moments(1, 8, field);
        Functional lam = solve_dual(op, delta, 8);
        Functional image = dual_apply(op, lam);
        CHECK(image.agrees_with(delta.truncated(8), 8));
    }
}

TEST_CASE("dual_apply_with_identity_fill") {
    // only one column overridden; the rest pass the functional through
    std::map<MultiIndex, FinSuppVec> cols;
    cols.emplace(MultiIndex{1}, Scalar::rational(mpq_class(3)) * basis_vector(MultiIndex{1}, Q));
    ColumnFiniteOperator op(1, 0, std::move(cols), ColumnFiniteOperator::Fill::Identity, Q);
    testutil::Rng rng(9);
    Functional t = testutil::random_functional(rng, Q, 1, 5);
    Functional out = dual_apply(op, t);
    CHECK(out.moment({0}) == t.moment({0}));
    CHECK(out.moment({1}) == q(3) * t.moment({1}));
    CHECK(out.moment({4}) == t.moment({4}));
}

TEST_CASE("multi_index_width_is_normalized") {
    // a dims-2 functional accepts short and padded keys interchangeably
    Functional f(2, 4, Q);
    f.set(MultiIndex{2}, q(5));
    CHECK(f.moment({2, 0}) == q(5));
    CHECK(f.moment({2}) == q(5));
    CHECK_THROWS_AS(f.set(MultiIndex{0, 0, 1}, q(1)), Error);

    std::map<MultiIndex, FinSuppVec> cols;
    cols.emplace(MultiIndex{1}, basis_vector(MultiIndex{1, 0}, Q));
    ColumnFiniteOperator op(2, 0, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q);
    CHECK(op.column({1, 0}) == basis_vector(MultiIndex{1, 0}, Q));
}

TEST_CASE("converse_direction_kernel_makes_some_system_inconsistent") {
    // Whenever the probe finds a kernel witness v, the indicator T with
    // <T, v> != 0 gives an unsolvable level system.
    testutil::Rng rng(228);
    for (int t = 0; t < 10; ++t) {
        std::map<MultiIndex, FinSuppVec> cols;
        for (std::uint32_t n = 0; n <= 8; ++n) {
            FinSuppVec c(Q);
            if (n != 3) c.set(Index::tuple({n}), testutil::random_scalar(rng, Q, true));
            cols.emplace(MultiIndex{n}, std::move(c));
        }
        ColumnFiniteOperator op(1, 0, std::move(cols), ColumnFiniteOperator::Fill::Zero, Q);
        auto cert = injectivity_probe(op, 8);
        REQUIRE_FALSE(cert.injective);

        Functional bad(1, 8, Q);
        Index s = cert.witness.entries().begin()->first;
        bad.set(s.tuple_value(), q(1));
        auto outcome = detail::solve_dual_unchecked(op, bad, 8);
        CHECK_FALSE(outcome.consistent);
    }
}
