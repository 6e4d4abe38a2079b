#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcone/known.hpp"
#include "entcone/sequence.hpp"
#include "support/oracles.hpp"

using namespace entcone;

namespace {

Integer binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer gcd_of(const LinForm& f)
{
    Integer g = 0;
    for (const auto& c : f.coeffs())
        g = gcd(g, Integer(c.get_num()));
    return g;
}

}  // namespace

TEST_CASE("first members")
{
    // s = 1 is Shannon-type.
    const LinForm one = seq_inequality(SeqIndex(1));
    CHECK(infer(shannon_cone(4), one).implied);
    CHECK(seq_inequality(SeqIndex(2)) == canonicalize(zhang_yeung()));
    CHECK(seq_inequality(SeqIndex(3)) == canonicalize(iterated_zhang_yeung()));
    CHECK_THROWS_AS(SeqIndex(0), std::invalid_argument);
    CHECK_THROWS_AS(SeqIndex(-3), std::invalid_argument);
}

TEST_CASE("integer recurrences match the binomial expansion")
{
    for (int s = 0; s <= 8; ++s) {
        // (2 + sqrt2)^s + (2 - sqrt2)^s keeps the even powers of sqrt2.
        Integer u = 0, w = 0;
        for (int j = 0; j <= s; ++j) {
            const Integer term = binomial(s, j) * (Integer(1) << (s - j));
            const int half = j / 2;
            Integer p2 = 1;
            for (int t = 0; t < half; ++t)
                p2 *= 2;
            if (j % 2 == 0)
                u += 2 * term * p2;
            else
                w += 2 * term * p2;
        }
        const oracle::QSqrt2 plus = oracle::s_plus(s);
        const oracle::QSqrt2 minus = oracle::s_minus(s);
        CHECK((plus + minus).a == Rational(u));
        CHECK((plus + minus).b == 0);
        CHECK((plus - minus).b == Rational(w));
        CHECK((plus - minus).a == 0);
        if (s >= 1) {
            const SeqTerms t = seq_terms(SeqIndex(s));
            CHECK(t.u == u);
            CHECK(t.w == w);
            CHECK(t.half == (Integer(1) << (s - 1)));
        }
    }
}

TEST_CASE("closed form agrees with the literal formula")
{
    for (int s = 1; s <= 20; ++s) {
        CAPTURE(s);
        const auto literal = oracle::literal_family_member(s);
        REQUIRE(literal.has_value());
        const LinForm f = seq_inequality(SeqIndex(s));
        // Same ray, and the stored form has integer coefficients.
        CHECK(canonicalize(*literal) == canonicalize(f));
        for (const auto& c : f.coeffs())
            CHECK(c.get_den() == 1);
        CHECK(canonicalize(f) == f);
        CHECK(gcd_of(f) == 1);
    }
}

TEST_CASE("symmetric in the first two variables")
{
    const VariableMap swap = {2, 1, 3, 4};
    for (int s = 1; s <= 8; ++s) {
        const LinForm f = seq_inequality(SeqIndex(s));
        CHECK(substitute(f, swap, 4) == f);
    }
}

TEST_CASE("each member is new relative to its predecessor")
{
    for (int s = 2; s <= 6; ++s) {
        CAPTURE(s);
        const Cone prev = adjoin(shannon_cone(4), std::vector<LinForm>{seq_inequality(SeqIndex(s - 1))}, true);
        CHECK_FALSE(infer(prev, seq_inequality(SeqIndex(s))).implied);
    }
}

TEST_CASE("members hold on random distributions")
{
    std::mt19937_64 rng(31);
    for (int s = 1; s <= 6; ++s) {
        const LinForm f = seq_inequality(SeqIndex(s));
        for (int t = 0; t < 200; ++t)
            CHECK(oracle::holds_entropically(f, oracle::random_distribution(4, 3, rng)));
    }
}

TEST_CASE("step certificates")
{
    for (int s = 2; s <= 3; ++s) {
        CAPTURE(s);
        const Certificate c = verify_seq_step(SeqIndex(s));
        CHECK(check_certificate(seq_step_cone(SeqIndex(s), default_sequence_scenario()), c));
        CHECK(c.target == lift(seq_inequality(SeqIndex(s)), 5));
    }
    CHECK_THROWS(verify_seq_step(SeqIndex(1)));

    // Without the copy step nothing beyond Shannon follows.
    Scenario none;
    none.m = 4;
    CHECK_THROWS_AS(verify_seq_step(SeqIndex(2), none), SequenceStepFailure);
}
