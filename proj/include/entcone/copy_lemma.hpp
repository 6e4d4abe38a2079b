#pragma once

// Copy-lemma constraint systems. Adjoining xi_new as a xi_J-copy of xi_k over
// xi_I forces two families of entropy equalities:
//   H(new, I1) = H(k, I1)                                for every I1 of I,
//   H(new, I) + H(I, J1) = H(new, I, J1) + H(I)          for nonempty J1 of {k} u J.

#include <string_view>
#include <vector>

#include "entcone/shannon_cone.hpp"

namespace entcone {

struct CopyStep {
    int k = 0;
    SubsetMask copied_over;  // I
    SubsetMask kept_apart;   // J
    int new_var = 0;

    /// Throws std::invalid_argument unless {k}, I, J are pairwise disjoint
    /// subsets of {1..new_var-1}.
    void validate() const;
};

struct Scenario {
    int m = 0;
    std::vector<CopyStep> steps;
    /// Extra inequalities over m variables valid for every entropic vector.
    std::vector<LinForm> base_bound;
    /// Embed base_bound through every block map (otherwise only
    /// through the identity).
    bool substituted = true;
    /// Additional user-supplied equalities over n variables.
    std::vector<LinForm> extra_equalities;

    int n() const { return m + static_cast<int>(steps.size()); }
    void validate() const;
};

/// 2^|I| equalities of the first family followed by 2^(|J|+1) - 1 of the
/// second, canonicalized, over new_var variables.
std::vector<LinForm> copy_equalities(const CopyStep& step);

/// H_n (plus the embedded non-Shannon part of `base` and of the scenario's
/// base_bound) intersected with the copy equalities of every step.
Cone scenario_cone(const Scenario& scenario, const Cone& base);

/// Parses an equality script (records of the inequality file format with
/// "rel": "eq") over n variables.
std::vector<LinForm> mmrv_equalities(std::string_view script, int n);

}  // namespace entcone
