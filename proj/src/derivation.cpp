#include "entcone/derivation.hpp"

#include <algorithm>
#include <map>

namespace entcone {

std::string to_string(FacetClass c)
{
    switch (c) {
    case FacetClass::shannon:
        return "shannon";
    case FacetClass::known:
        return "known";
    case FacetClass::novel:
        return "new";
    }
    return "?";
}

std::size_t DeriveResult::count(FacetClass c) const
{
    return static_cast<std::size_t>(std::count_if(
        reports.begin(), reports.end(), [c](const FacetReport& r) { return r.classification == c; }));
}

namespace {

bool lex_less(const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; }

Cone context_cone(int m, std::span<const LinForm> known)
{
    return adjoin(shannon_cone(m), known, true);
}

struct Classifier {
    Cone shannon;
    Cone context;

    Classifier(int m, std::span<const LinForm> known)
        : shannon(shannon_cone(m)), context(context_cone(m, known))
    {}

    void classify(FacetReport& report, bool witnesses) const
    {
        if (infer(shannon, report.facet).implied) {
            report.classification = FacetClass::shannon;
            return;
        }
        InferResult in_context = infer(context, report.facet);
        if (in_context.implied) {
            report.classification = FacetClass::known;
            return;
        }
        report.classification = FacetClass::novel;
        if (witnesses)
            report.independence_witness = std::move(in_context.witness);
    }
};

}  // namespace

DeriveResult derive(const Scenario& scenario, const Cone& base, std::span<const LinForm> known,
                    const DeriveOptions& options)
{
    if (base.n != scenario.m)
        throw std::invalid_argument("derive: base cone must be over m variables");
    for (const auto& f : known) {
        if (f.n() > scenario.m)
            throw std::invalid_argument("derive: known inequality over too many variables");
    }
    DeriveResult result;
    result.scenario_cone = scenario_cone(scenario, base);
    const int m = scenario.m;
    const SubsetMask vars = SubsetMask::full(m);
    const Classifier classifier(m, known);

    bool targeted = options.targeted;
    if (!targeted) {
        try {
            ProjectionResult projection = chm_project_vars(result.scenario_cone, vars, options.chm);
            result.stats = projection.stats;
            result.projection = std::move(projection.cone);
            result.raw_certificates = std::move(projection.certificates);
        } catch (const ProjectionBudgetExceeded&) {
            if (options.candidates.empty())
                throw;
            targeted = true;
        }
    }

    if (targeted) {
        result.targeted = true;
        std::map<LinForm, std::size_t, decltype(&lex_less)> by_orbit(&lex_less);
        for (const auto& candidate : options.candidates) {
            if (candidate.n() != m)
                throw std::invalid_argument("derive: candidates must be over m variables");
            const LinForm lifted = lift(canonicalize(candidate), result.scenario_cone.n);
            InferResult inferred = infer(result.scenario_cone, lifted);
            if (!inferred.implied) {
                result.refuted_candidates.push_back(candidate);
                continue;
            }
            FacetReport report;
            report.facet = canonicalize(candidate);
            report.orbit_representative = orbit_canonical(candidate);
            report.proof = std::move(*inferred.certificate);
            report.raw_count = 1;
            report.orbit_size = substituted_forms(candidate, m).size();
            auto [it, inserted] = by_orbit.emplace(report.orbit_representative, result.reports.size());
            if (!inserted) {
                ++result.reports[it->second].raw_count;
                continue;
            }
            classifier.classify(report, options.witnesses);
            result.reports.push_back(std::move(report));
        }
        return result;
    }

    // Group the raw facets by permutation orbit, keeping first-seen order.
    std::map<LinForm, std::size_t, decltype(&lex_less)> by_orbit(&lex_less);
    const auto& facets = result.projection->ineqs;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        LinForm orbit = orbit_canonical(facets[i]);
        auto it = by_orbit.find(orbit);
        if (it != by_orbit.end()) {
            ++result.reports[it->second].raw_count;
            continue;
        }
        FacetReport report;
        report.facet = facets[i];
        report.orbit_representative = orbit;
        report.proof = result.raw_certificates[i];
        report.raw_count = 1;
        report.orbit_size = substituted_forms(facets[i], m).size();
        classifier.classify(report, options.witnesses);
        by_orbit.emplace(std::move(orbit), result.reports.size());
        result.reports.push_back(std::move(report));
    }
    return result;
}

SigmaResult sigma_step(const Cone& bound, const Scenario& scenario, const DeriveOptions& options)
{
    if (bound.n != scenario.m)
        throw std::invalid_argument("sigma_step: bound must be over m variables");
    // Classification context is the bound itself.
    std::vector<LinForm> known = bound.ineqs;
    SigmaResult out;
    out.derivation = derive(scenario, bound, known, options);

    std::vector<LinForm> additions;
    if (out.derivation.projection) {
        for (const auto& f : out.derivation.projection->ineqs)
            additions.push_back(f);
    } else {
        for (const auto& r : out.derivation.reports)
            additions.push_back(r.facet);
    }
    // Only facets the bound does not already imply can tighten it.
    std::vector<LinForm> tightening;
    for (const auto& f : additions) {
        if (!infer(bound, f).implied)
            tightening.push_back(f);
    }
    Cone next = adjoin(bound, tightening, true);
    out.bound = normalize(next);
    return out;
}

std::vector<SigmaResult> iterate(const Cone& bound, const Scenario& scenario, int steps,
                                 const DeriveOptions& options)
{
    if (steps < 0)
        throw std::invalid_argument("iterate: negative step count");
    std::vector<SigmaResult> out;
    Cone current = bound;
    for (int i = 0; i < steps; ++i) {
        out.push_back(sigma_step(current, scenario, options));
        current = out.back().bound;
    }
    return out;
}

std::optional<EntVector> independence_check(const LinForm& candidate,
                                            std::span<const LinForm> context)
{
    const Cone cone = context_cone(candidate.n(), context);
    InferResult result = infer(cone, candidate);
    if (result.implied)
        return std::nullopt;
    return std::move(result.witness);
}

}  // namespace entcone
