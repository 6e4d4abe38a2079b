#pragma once

// Derivation pipeline: lift an outer bound through a copy scenario, project
// back onto the original variables, and sort the resulting facets into
// Shannon-type, already known, and new inequalities.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entcone/copy_lemma.hpp"
#include "entcone/projection.hpp"

namespace entcone {

enum class FacetClass { shannon, known, novel };

std::string to_string(FacetClass c);

/// One class of projected facets that agree up to variable permutation.
struct FacetReport {
    /// First raw facet of the class in canonical order, over m variables.
    LinForm facet;
    /// Smallest member of the permutation orbit.
    LinForm orbit_representative;
    FacetClass classification = FacetClass::shannon;
    /// Proof of `facet` (lifted) from the scenario cone.
    Certificate proof;
    /// For new facets: a point of H_m cut by every known form but not by `facet`.
    std::optional<EntVector> independence_witness;
    /// Raw projected facets falling in this class.
    std::size_t raw_count = 0;
    /// Distinct substituted forms of the facet over m variables.
    std::size_t orbit_size = 0;
};

struct DeriveOptions {
    ChmOptions chm;
    bool witnesses = true;
    /// Candidate inequalities (over m variables) checked one by one when the
    /// projection is skipped or runs out of budget.
    std::vector<LinForm> candidates;
    /// Skip the projection and go straight to the candidate list.
    bool targeted = false;
};

struct DeriveResult {
    Cone scenario_cone;
    /// The projection with all raw facets; empty in targeted mode.
    std::optional<Cone> projection;
    std::vector<Certificate> raw_certificates;
    std::vector<FacetReport> reports;
    /// Targeted mode: candidates that do not follow from the scenario cone.
    std::vector<LinForm> refuted_candidates;
    bool targeted = false;
    ProjectionStats stats;

    std::size_t raw_facet_count() const { return projection ? projection->ineqs.size() : 0; }
    std::size_t count(FacetClass c) const;
};

/// `known` holds extra valid inequalities over m variables; all their
/// substituted forms join the classification context.
DeriveResult derive(const Scenario& scenario, const Cone& base, std::span<const LinForm> known,
                    const DeriveOptions& options = {});

struct SigmaResult {
    /// Input bound intersected with every substituted form of the projected
    /// facets, normalized.
    Cone bound;
    DeriveResult derivation;
};

/// One application of the outer-bound map for a fixed scenario.
SigmaResult sigma_step(const Cone& bound, const Scenario& scenario,
                       const DeriveOptions& options = {});

/// k successive sigma steps starting from `bound`.
std::vector<SigmaResult> iterate(const Cone& bound, const Scenario& scenario, int steps,
                                 const DeriveOptions& options = {});

/// A point satisfying H_m and every substituted form of `context` on which
/// `candidate` is negative, or nothing if the candidate is implied.
std::optional<EntVector> independence_check(const LinForm& candidate,
                                             std::span<const LinForm> context);

}  // namespace entcone
