#pragma once

// Exact rational linear programming for homogeneous systems.
//
// Everything here reduces to one Farkas feasibility problem: given columns
// a_1..a_m (sign-constrained multipliers) and e_1..e_k (free multipliers),
// either find y >= 0, z with sum y_i a_i + sum z_j e_j = c, or find w with
// a_i . w >= 0, e_j . w = 0 and c . w < 0. It is solved by a phase-one simplex
// on a sparse rational tableau; the dual of the final tableau yields w.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "entcone/rational.hpp"
#include "entcone/shannon_cone.hpp"

namespace entcone {

enum class PivotRule {
    bland,
    /// Largest reduced cost; switches to Bland's rule after a run of
    /// degenerate pivots and back after the first nondegenerate one.
    dantzig_bland_fallback,
    /// Largest reduced cost with the lexicographic ratio test; never cycles.
    dantzig_lex,
};

struct FarkasResult {
    bool feasible = false;
    RationalVector nonneg_multipliers;  // y, when feasible
    RationalVector free_multipliers;    // z, when feasible
    RationalVector dual_ray;            // w, when infeasible
    std::size_t pivots = 0;
};

class FarkasSolver {
public:
    explicit FarkasSolver(PivotRule rule = PivotRule::dantzig_lex) : rule_(rule) {}

    /// All columns and the target have the same length.
    FarkasResult solve(std::span<const RationalVector> nonneg_columns,
                       std::span<const RationalVector> free_columns,
                       std::span<const Rational> target);

    std::size_t total_pivots() const { return total_pivots_; }

private:
    PivotRule rule_;
    std::size_t total_pivots_ = 0;
};

/// Proof that `target` is a combination of cone constraints:
/// sum y_i ineqs[i] + sum z_j eqs[j] = target with y >= 0.
struct Certificate {
    std::map<std::size_t, Rational> ineq_multipliers;
    std::map<std::size_t, Rational> eq_multipliers;
    LinForm target;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct InferResult {
    bool implied = false;
    std::optional<Certificate> certificate;
    /// A member of the cone on which the target is negative.
    std::optional<EntVector> witness;
};

/// Decides whether `target >= 0` follows from the cone's constraints.
InferResult infer(const Cone& cone, const LinForm& target,
                  PivotRule rule = PivotRule::dantzig_lex);

/// Pure exact re-multiplication; throws std::out_of_range on bad indices.
bool check_certificate(const Cone& cone, const Certificate& cert);

enum class LpSense { minimize, maximize };
enum class LpStatus { bounded_at_zero, unbounded };

struct SolveResult {
    LpStatus status = LpStatus::bounded_at_zero;
    std::optional<Certificate> certificate;  // bounded: proof that the optimum is 0
    std::optional<EntVector> ray;            // unbounded: improving ray in the cone
};

/// Optimizes a linear objective over a cone. The optimum of a homogeneous LP is
/// either 0 or unbounded.
SolveResult solve(const LinForm& objective, const Cone& cone, LpSense sense,
                  PivotRule rule = PivotRule::dantzig_lex);

/// Block system A1 x1 + A2 x2 >= b, E1 x1 + E2 x2 = d. Rows are dense.
struct ProjectionSystem {
    std::vector<RationalVector> a1, a2;
    RationalVector b;
    std::vector<RationalVector> e1, e2;
    RationalVector d;
};

/// x1 lies in the projection onto the x1-space iff
///   max (b - A1 x1)^T y + (d - E1 x1)^T w  s.t.  A2^T y + E2^T w = 0, y >= 0
/// is at most zero.
bool point_in_projection(const ProjectionSystem& system, std::span<const Rational> x1);

/// Splits the cone's constraints into kept/dropped coordinate blocks and runs
/// the membership LP for `x1`, given as a vector over the cone's ground set
/// whose dropped coordinates are ignored.
bool point_in_projection(const Cone& cone, std::span<const SubsetMask> kept, const EntVector& x1);

}  // namespace entcone
