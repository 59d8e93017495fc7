#include <doctest.h>

#include "hamel/scalar.hpp"
#include "test_util.hpp"

using namespace hamel;

TEST_CASE("rationals_stay_in_lowest_terms") {
    Scalar a = Scalar::rational(mpq_class(6, 4));
    CHECK(a.str() == "3/2");
    Scalar b = Scalar::parse(FieldTag::Q(), "10/5");
    CHECK(b.str() == "2");
    CHECK(Scalar::rational(mpq_class(-3, 6)).str() == "-1/2");
}

TEST_CASE("field_axioms_hold_exactly") {
    testutil::Rng rng(12345);
    for (FieldTag field : {FieldTag::Q(), FieldTag::Qi(), FieldTag::GF(5), FieldTag::GF(2)}) {
        for (int i = 0; i < 50; ++i) {
            Scalar a = testutil::random_scalar(rng, field);
            Scalar b = testutil::random_scalar(rng, field);
            Scalar c = testutil::random_scalar(rng, field);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("gaussian_arithmetic_and_conjugation") {
    Scalar i = Scalar::gaussian(mpq_class(0), mpq_class(1));
    CHECK((i * i).str() == "-1");
    CHECK(i.conj().str() == "0-1i");
    Scalar z = Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(z.str() == "1/2-3/4i");
    CHECK((z * z.inverse()).is_one());
    // conjugation is the identity on Q and GF(p)
    CHECK(Scalar::rational(mpq_class(-7, 3)).conj().str() == "-7/3");
    CHECK(Scalar::residue(3, 5).conj().residue_value() == 3);
}

TEST_CASE("prime_field_matches_bignum_oracle") {
    testutil::Rng rng(999);
    const std::uint64_t p = 1000003;
    FieldTag gf = FieldTag::GF(p);
    mpz_class pz(static_cast<unsigned long>(p));
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int t = 0; t < 200; ++t) {
        std::uint64_t a = d(rng), b = d(rng);
        Scalar sa = Scalar::residue(a, p), sb = Scalar::residue(b, p);
        mpz_class za(static_cast<unsigned long>(a)), zb(static_cast<unsigned long>(b));
        CHECK((sa * sb).residue_value() == mpz_class(za * zb % pz).get_ui());
        CHECK((sa + sb).residue_value() == mpz_class((za + zb) % pz).get_ui());
    }
    (void)gf;
}

TEST_CASE("miller_rabin_is_deterministic_and_exact") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(97));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64((1ull << 61) - 1)); // Mersenne prime
    CHECK(is_prime_u64(18446744073709551557ull)); // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));        // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull)); // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime_u64((1ull << 62) + 2));
    CHECK_THROWS_AS(FieldTag::GF(15), Error);
}

TEST_CASE("scalar_string_roundtrip") {
    testutil::Rng rng(777);
    for (FieldTag field : {FieldTag::Q(), FieldTag::Qi(), FieldTag::GF(7)}) {
        for (int i = 0; i < 100; ++i) {
            Scalar a = testutil::random_scalar(rng, field);
            CHECK(Scalar::parse(field, a.str()) == a);
        }
    }
    CHECK(Scalar::parse(FieldTag::Qi(), "i").str() == "0+1i");
    CHECK(Scalar::parse(FieldTag::Qi(), "-i").str() == "0-1i");
    CHECK(Scalar::parse(FieldTag::Qi(), "3/4i").str() == "0+3/4i");
    CHECK(Scalar::parse(FieldTag::Qi(), "1-2i").str() == "1-2i");
    CHECK_THROWS_AS(Scalar::parse(FieldTag::Q(), "1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse(FieldTag::Q(), "a"), Error);
}

TEST_CASE("mixed_fields_are_rejected") {
    Scalar q = Scalar::rational(mpq_class(1));
    Scalar g = Scalar::residue(1, 5);
    CHECK_THROWS_AS(q + g, MixedFieldsError);
    CHECK_THROWS_AS(q * g, MixedFieldsError);
}

TEST_CASE("division_by_zero_fails_loudly") {
    Scalar z = Scalar::zero(FieldTag::Q());
    CHECK_THROWS_AS(z.inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::one(FieldTag::GF(5)) / Scalar::zero(FieldTag::GF(5)),
                    DivisionByZeroError);
}

TEST_CASE("field_tag_names_parse_back") {
    CHECK(FieldTag::parse("Q") == FieldTag::Q());
    CHECK(FieldTag::parse("Qi") == FieldTag::Qi());
    CHECK(FieldTag::parse("GF(5)") == FieldTag::GF(5));
    CHECK(FieldTag::parse("GF:11") == FieldTag::GF(11));
    CHECK(FieldTag::GF(5).name() == "GF(5)");
}
