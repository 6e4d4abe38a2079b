#include "properties.hpp"

#include <random>
#include <sstream>

#include "entcone/derivation.hpp"
#include "entcone/io.hpp"
#include "entcone/sequence.hpp"
#include "oracles.hpp"

using namespace entcone;

namespace props {

namespace {

SuiteResult fail(SuiteResult r, const std::string& what)
{
    r.ok = false;
    r.failure = what;
    return r;
}

bool same_cone(const Cone& a, const Cone& b)
{
    const Cone na = normalize(a);
    const Cone nb = normalize(b);
    return na.ineqs == nb.ineqs && na.eqs == nb.eqs;
}

std::string describe(const Cone& c)
{
    std::ostringstream out;
    out << format_cone(c);
    return out.str();
}

}  // namespace

SuiteResult elemental_counts()
{
    SuiteResult r;
    for (int n = 2; n <= 7; ++n) {
        long long triples = 0;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j)
                triples += 1LL << (n - 2);
        }
        const long long expected = n + triples;
        const auto forms = elemental_inequalities(n);
        ++r.cases;
        if (static_cast<long long>(forms.size()) != expected || elemental_count(n) != expected)
            return fail(r, "n = " + std::to_string(n) + ": " + std::to_string(forms.size()) +
                               " forms, expected " + std::to_string(expected));
        std::vector<LinForm> sorted = forms;
        std::sort(sorted.begin(), sorted.end(),
                  [](const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail(r, "duplicate elemental form for n = " + std::to_string(n));
    }
    return r;
}

SuiteResult fm_chm_equivalence(std::size_t cones, std::uint64_t seed)
{
    SuiteResult r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> subset(1, 6);
    for (std::size_t t = 0; t < cones; ++t) {
        const Cone cone = oracle::random_cone(3, 14, rng);
        const SubsetMask keep(subset(rng));

        std::vector<SubsetMask> drop;
        for (std::uint32_t b = 1; b < 8; ++b) {
            if (!SubsetMask(b).is_subset_of(keep))
                drop.emplace_back(b);
        }
        const Cone fm = fm_eliminate(cone, drop);
        Cone fm_small(keep.size());
        for (const auto& f : fm.ineqs)
            fm_small.add_inequality(compress(f, keep));
        for (const auto& f : fm.eqs)
            fm_small.add_equality(compress(f, keep));

        ChmOptions opts;
        const ProjectionResult chm = chm_project_vars(cone, keep, opts);
        ++r.cases;
        if (!same_cone(fm_small, chm.cone)) {
            return fail(r, "case " + std::to_string(t) + ": projections differ\ninput:\n" +
                               describe(cone) + "fm:\n" + describe(normalize(fm_small)) +
                               "chm:\n" + describe(normalize(chm.cone)));
        }
        for (std::size_t i = 0; i < chm.certificates.size(); ++i) {
            if (!check_certificate(cone, chm.certificates[i]))
                return fail(r, "case " + std::to_string(t) + ": bad facet certificate");
        }
        if (chm.cone.rays) {
            for (const auto& ray : *chm.cone.rays) {
                if (!chm.cone.contains(ray))
                    return fail(r, "case " + std::to_string(t) + ": ray outside its own cone");
            }
        }
    }
    return r;
}

SuiteResult farkas_round_trips(std::size_t cases, std::uint64_t seed)
{
    SuiteResult r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (std::size_t t = 0; t < cases; ++t) {
        const Cone cone = oracle::random_cone(3, 12, rng);
        LinForm target(3);
        if (t % 2 == 0) {
            // A nonnegative combination: always implied.
            for (const auto& f : cone.ineqs) {
                const int y = small(rng);
                for (std::uint32_t i = 1; i < 8; ++i)
                    target.add(SubsetMask(i), f.coeffs()[i] * y);
            }
            for (const auto& f : cone.eqs) {
                const int z = coeff(rng);
                for (std::uint32_t i = 1; i < 8; ++i)
                    target.add(SubsetMask(i), f.coeffs()[i] * z);
            }
        } else {
            for (std::uint32_t i = 1; i < 8; ++i)
                target.set(SubsetMask(i), coeff(rng));
        }
        ++r.cases;
        const InferResult res = infer(cone, target);
        const InferResult bland = infer(cone, target, PivotRule::bland);
        const InferResult fallback = infer(cone, target, PivotRule::dantzig_bland_fallback);
        const std::string where = "case " + std::to_string(t) + ": ";
        if (res.implied != bland.implied || res.implied != fallback.implied)
            return fail(r, where + "pivot rules disagree");
        if (t % 2 == 0 && !res.implied)
            return fail(r, where + "nonnegative combination reported as not implied");
        if (res.implied) {
            if (!res.certificate || res.witness)
                return fail(r, where + "implied result must carry exactly a certificate");
            const Certificate& cert = *res.certificate;
            if (!check_certificate(cone, cert))
                return fail(r, where + "certificate rejected");
            const Certificate back = certificate_from_json(json::parse(certificate_to_json(cert).dump()));
            if (!(back == cert) || !check_certificate(cone, back))
                return fail(r, where + "certificate JSON round trip");
            if (!cert.ineq_multipliers.empty()) {
                Certificate bent = cert;
                bent.ineq_multipliers.begin()->second += Rational(1, 1000000000);
                if (check_certificate(cone, bent))
                    return fail(r, where + "perturbed certificate accepted");
            }
        } else {
            if (!res.witness || res.certificate)
                return fail(r, where + "refuted result must carry exactly a witness");
            if (!cone.contains(*res.witness) || sgn(evaluate(target, *res.witness)) >= 0)
                return fail(r, where + "witness does not separate");
        }
    }
    return r;
}

SuiteResult shannon_projection(int n)
{
    SuiteResult r;
    const Cone big = shannon_cone(n);
    const Cone small = shannon_cone(n - 1);
    const SubsetMask keep = SubsetMask::full(n - 1);
    ++r.cases;
    const ProjectionResult chm = chm_project_vars(big, keep);
    if (!same_cone(chm.cone, small))
        return fail(r, "chm projection of H_" + std::to_string(n) + " differs from H_" + std::to_string(n - 1));
    if (n <= 4) {
        ++r.cases;
        std::vector<SubsetMask> drop;
        for (std::uint32_t b = 1; b < (1u << n); ++b) {
            if (SubsetMask(b).contains(n))
                drop.emplace_back(b);
        }
        Cone fm = fm_eliminate(big, drop);
        Cone fm_small(n - 1);
        for (const auto& f : fm.ineqs)
            fm_small.add_inequality(compress(f, keep));
        if (!same_cone(fm_small, small))
            return fail(r, "fm projection of H_" + std::to_string(n) + " differs");
    }
    return r;
}

SuiteResult shannon_soundness(std::size_t distributions, std::uint64_t seed)
{
    SuiteResult r;
    std::mt19937_64 rng(seed);
    std::vector<std::vector<LinForm>> elemental(5);
    for (int n = 2; n <= 4; ++n)
        elemental[n] = elemental_inequalities(n);
    for (std::size_t t = 0; t < distributions; ++t) {
        const int n = 2 + static_cast<int>(t % 3);
        const oracle::Distribution d = oracle::random_distribution(n, 4, rng);
        ++r.cases;
        for (const auto& f : elemental[n]) {
            if (!oracle::holds_entropically(f, d))
                return fail(r, "distribution " + std::to_string(t) + " violates " + pretty(f));
        }
    }
    return r;
}

SuiteResult copy_soundness(std::size_t distributions, std::uint64_t seed)
{
    SuiteResult r;
    std::mt19937_64 rng(seed);
    const CopyStep steps[] = {
        {3, SubsetMask::of({1, 2}), SubsetMask::of({4}), 5},
        {3, SubsetMask::of({1, 4, 5}), SubsetMask::of({2}), 6},
        {2, SubsetMask::of({1, 3, 5, 6}), SubsetMask::of({4}), 7},
    };
    std::vector<std::vector<LinForm>> eqs;
    for (const auto& s : steps)
        eqs.push_back(copy_equalities(s));
    for (std::size_t t = 0; t < distributions; ++t) {
        // Deeper chains are costlier; run them on a fraction of the samples.
        const std::size_t depth = t % 9 == 0 ? 3 : (t % 3 == 0 ? 2 : 1);
        oracle::Distribution d = oracle::random_distribution(4, depth == 1 ? 3 : 2, rng);
        ++r.cases;
        for (std::size_t s = 0; s < depth; ++s) {
            d = oracle::copy_extend(d, steps[s]);
            for (const auto& e : eqs[s]) {
                if (!oracle::evaluate_entropic(e, d).is_zero())
                    return fail(r, "distribution " + std::to_string(t) + ", step " +
                                       std::to_string(s + 1) + ": " + pretty(e) + " is not exact");
            }
        }
    }
    return r;
}

SuiteResult derive_determinism()
{
    SuiteResult r;
    const Scenario s = default_sequence_scenario();
    const DeriveResult a = derive(s, shannon_cone(4), {});
    const DeriveResult b = derive(s, shannon_cone(4), {});
    ++r.cases;
    if (!a.projection || !b.projection)
        return fail(r, "projection missing");
    if (a.projection->ineqs != b.projection->ineqs || a.projection->eqs != b.projection->eqs ||
        a.projection->rays != b.projection->rays)
        return fail(r, "projections differ");
    if (a.raw_certificates != b.raw_certificates)
        return fail(r, "certificates differ");
    if (a.reports.size() != b.reports.size())
        return fail(r, "report counts differ");
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        const auto& x = a.reports[i];
        const auto& y = b.reports[i];
        if (!(x.facet == y.facet) || x.classification != y.classification ||
            !(x.proof == y.proof) || x.independence_witness != y.independence_witness ||
            x.raw_count != y.raw_count || x.orbit_size != y.orbit_size)
            return fail(r, "report " + std::to_string(i) + " differs");
    }
    return r;
}

}  // namespace props
