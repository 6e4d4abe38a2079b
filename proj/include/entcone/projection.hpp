#pragma once

// Projection of polyhedral cones given in H-representation.
//
// chm_project implements the convex hull method: it grows an inner
// approximation of the projection from points of the projection, keeping the
// approximation as a double description pair. Each candidate facet is either
// certified by an inference LP against the lifted cone or refuted by a point
// of the cone whose image is then added to the approximation. fm_eliminate is
// plain Fourier-Motzkin elimination with LP pruning, kept as an independent
// oracle for small instances.

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "entcone/exact_lp.hpp"
#include "entcone/shannon_cone.hpp"

namespace entcone {

/// Nonempty subsets of `vars`, in ascending bitmask order.
std::vector<SubsetMask> coordinates_of(SubsetMask vars);

/// Extreme rays of the cone by incremental double description. Constraints are
/// inserted by increasing support size, ties broken by bitmask order of the
/// support. A lineality space, if present, contributes each basis vector twice
/// (both orientations), so the list always generates the cone.
std::vector<EntVector> dd_rays(const Cone& cone);

/// Drops inequalities implied by the remaining ones plus `eqs`, scanning in
/// order. The solution set is unchanged.
std::vector<LinForm> remove_redundant(std::span<const LinForm> ineqs,
                                      std::span<const LinForm> eqs,
                                      PivotRule rule = PivotRule::dantzig_lex);

/// Canonical H-representation: implicit equalities are detected and moved to
/// `eqs`, which are brought to reduced row echelon form; inequalities are
/// reduced modulo the equalities, canonicalized, made irredundant and sorted.
/// Two cones are equal iff their normalized representations are identical.
Cone normalize(const Cone& cone);

/// Fourier-Motzkin elimination of the `drop` coordinates, one at a time, with
/// LP redundancy removal after each step. The result lives in the same ground
/// set with zero coefficients on the dropped coordinates, normalized.
Cone fm_eliminate(const Cone& cone, std::span<const SubsetMask> drop);

class ProjectionBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ChmOptions {
    /// Points known to lie in the projection; they seed the approximation.
    std::vector<EntVector> warm_start;
    /// Check warm-start points with the membership LP before use.
    bool check_warm_start = true;
    /// Certify each output ray with the membership LP.
    bool certify_rays = true;
    /// Upper bound on inference LPs; 0 means unlimited.
    std::size_t max_lp_calls = 0;
    PivotRule rule = PivotRule::dantzig_lex;
    std::function<void(std::string_view)> log;
};

struct ProjectionStats {
    std::size_t lp_calls = 0;
    std::size_t generators = 0;
    std::size_t pivots = 0;
};

struct ProjectionResult {
    /// The projection: irredundant facets (ineqs), equalities in reduced
    /// echelon form, and its extreme rays.
    Cone cone;
    /// certificates[i] proves cone.ineqs[i], lifted to the input ground set,
    /// from the input cone.
    std::vector<Certificate> certificates;
    ProjectionStats stats;
};

/// Projects onto the coordinates `keep`; the output shares the input's ground
/// set, with zero coefficients outside `keep`.
ProjectionResult chm_project(const Cone& cone, std::span<const SubsetMask> keep,
                             const ChmOptions& options = {});

/// Projects onto the coordinates P(vars) and renumbers the variables of `vars`
/// to 1..|vars| in increasing order. Warm-start points are given over |vars|
/// variables. Certificates keep the input ground set.
ProjectionResult chm_project_vars(const Cone& cone, SubsetMask vars,
                                  const ChmOptions& options = {});

/// Renumbers a form supported on P(vars) to |vars| variables.
LinForm compress(const LinForm& f, SubsetMask vars);
/// Inverse of compress: places a form over |vars| variables onto P(vars).
LinForm expand(const LinForm& f, SubsetMask vars, int n_target);
EntVector expand(const EntVector& v, SubsetMask vars, int n_target);

}  // namespace entcone
