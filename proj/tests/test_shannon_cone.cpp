#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcone/exact_lp.hpp"
#include "entcone/known.hpp"
#include "entcone/shannon_cone.hpp"
#include "support/properties.hpp"

using namespace entcone;

namespace {

// Normalized, nondecreasing and submodular, written out directly.
Cone polymatroid_axioms(int n)
{
    Cone c(n);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t a = 1; a <= full; ++a) {
        for (std::uint32_t b = 1; b <= full; ++b) {
            if (a != b && (a & b) == a) {
                LinForm f(n);
                f.add(SubsetMask(b), 1);
                f.add(SubsetMask(a), -1);
                c.add_inequality(f);
            }
            if (a < b) {
                LinForm f(n);
                f.add(SubsetMask(a), 1);
                f.add(SubsetMask(b), 1);
                f.add(SubsetMask(a | b), -1);
                f.add(SubsetMask(a & b), -1);
                if (!f.is_zero())
                    c.add_inequality(f);
            }
        }
    }
    for (std::uint32_t a = 1; a <= full; ++a) {
        LinForm f(n);
        f.add(SubsetMask(a), 1);
        c.add_inequality(f);
    }
    return c;
}

bool mutually_implied(const Cone& a, const Cone& b)
{
    for (const auto& f : a.ineqs) {
        if (!infer(b, f).implied)
            return false;
    }
    for (const auto& f : b.ineqs) {
        if (!infer(a, f).implied)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("elemental inequalities for two variables")
{
    const auto forms = elemental_inequalities(2);
    REQUIRE(forms.size() == 3);
    // H(1|2), H(2|1), I(1;2)
    CHECK(forms[0] == LinForm(2, {{SubsetMask::of({1, 2}), 1}, {SubsetMask::of({2}), -1}}));
    CHECK(forms[1] == LinForm(2, {{SubsetMask::of({1, 2}), 1}, {SubsetMask::of({1}), -1}}));
    CHECK(forms[2] == LinForm(2, {{SubsetMask::of({1}), 1},
                                  {SubsetMask::of({2}), 1},
                                  {SubsetMask::of({1, 2}), -1}}));
}

TEST_CASE("elemental counts")
{
    CHECK(elemental_inequalities(4).size() == 28);
    CHECK(elemental_inequalities(7).size() == 679);
    CHECK(elemental_count(1) == 1);
    const auto r = props::elemental_counts();
    CHECK_MESSAGE(r.ok, r.failure);
    CHECK_THROWS(elemental_inequalities(0));
    CHECK_THROWS(elemental_inequalities(17));
}

TEST_CASE("elemental forms are the polymatroid axioms")
{
    for (int n = 2; n <= 3; ++n)
        CHECK(mutually_implied(shannon_cone(n), polymatroid_axioms(n)));
}

TEST_CASE("elemental forms are irredundant")
{
    for (int n = 2; n <= 4; ++n) {
        const auto forms = elemental_inequalities(n);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            Cone rest(n);
            for (std::size_t j = 0; j < forms.size(); ++j) {
                if (j != i)
                    rest.add_inequality(forms[j]);
            }
            CHECK_FALSE(infer(rest, forms[i]).implied);
        }
    }
}

TEST_CASE("membership")
{
    EntVector bits(2, {{SubsetMask::of({1}), 1}, {SubsetMask::of({2}), 1}, {SubsetMask::of({1, 2}), 2}});
    CHECK(shannon_cone(2).contains(bits));

    EntVector uniform(4);
    for (std::uint32_t b = 1; b < 16; ++b)
        uniform.set(SubsetMask(b), std::min(SubsetMask(b).size(), 3));
    CHECK(shannon_cone(4).contains(uniform));

    EntVector shrinking(2, {{SubsetMask::of({1}), 2}, {SubsetMask::of({2}), 1}, {SubsetMask::of({1, 2}), 1}});
    CHECK_FALSE(shannon_cone(2).contains(shrinking));
}

TEST_CASE("adjoin")
{
    const Cone h4 = shannon_cone(4);
    const LinForm zy = zhang_yeung();

    const Cone outer = adjoin(h4, std::vector<LinForm>{zy}, true);
    CHECK(outer.ineqs.size() == 28 + 12);
    CHECK_FALSE(outer.rays.has_value());

    const Cone unchanged = adjoin(h4, std::vector<LinForm>{}, true);
    CHECK(unchanged.ineqs == h4.ineqs);

    const Cone single = adjoin(h4, std::vector<LinForm>{zy}, false);
    CHECK(single.ineqs.size() == 29);

    // Duplicates (after canonicalization) are skipped.
    const Cone twice = adjoin(outer, std::vector<LinForm>{zy, zy}, true);
    CHECK(twice.ineqs.size() == outer.ineqs.size());

    const Cone five = adjoin(shannon_cone(5), std::vector<LinForm>{zy}, true);
    CHECK(five.ineqs.size() == elemental_count(5) + 180);

    CHECK_THROWS(adjoin(shannon_cone(3), std::vector<LinForm>{zy}, true));
}

TEST_CASE("validate")
{
    Cone c = shannon_cone(2);
    c.rays = std::vector<EntVector>{
        EntVector(2, {{SubsetMask::of({1}), 1}, {SubsetMask::of({1, 2}), 1}})};
    CHECK_NOTHROW(c.validate());
    c.rays->push_back(EntVector(2, {{SubsetMask::of({1}), 1}}));
    CHECK_THROWS(c.validate());
}
