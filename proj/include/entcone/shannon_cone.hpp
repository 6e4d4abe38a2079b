#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entcone/entropy_space.hpp"

namespace entcone {

/// Polyhedral cone {x : f(x) >= 0 for f in ineqs, g(x) = 0 for g in eqs}
/// over R^{P(N)}, optionally paired with a ray list (a double description pair).
struct Cone {
    int n = 0;
    std::vector<LinForm> ineqs;
    std::vector<LinForm> eqs;
    std::optional<std::vector<EntVector>> rays;

    Cone() = default;
    explicit Cone(int n);

    void add_inequality(LinForm f);
    void add_equality(LinForm f);

    /// Exact membership test against the H-representation.
    bool contains(const EntVector& v) const;

    /// Throws std::invalid_argument unless all members share n, relations match
    /// their list, and every ray satisfies every constraint.
    void validate() const;
};

/// The elemental Shannon inequalities over n variables: H(i | N-i) >= 0 for each
/// i, then I(i;j|K) >= 0 for i < j and K a subset of N-{i,j}. Canonicalized.
std::vector<LinForm> elemental_inequalities(int n);

inline long long elemental_count(int n)
{
    return n + static_cast<long long>(n) * (n - 1) / 2 * (1LL << (n - 2 < 0 ? 0 : n - 2));
}

Cone shannon_cone(int n);

/// Appends `extra` inequalities to the cone. With `substituted`, every distinct
/// form under block maps into cone.n variables is appended.
/// Forms already present (by canonical form) are skipped; rays are dropped.
Cone adjoin(const Cone& cone, std::span<const LinForm> extra, bool substituted);

}  // namespace entcone
