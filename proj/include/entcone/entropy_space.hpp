#pragma once

// Coordinates of R^{P(N)}: subsets of the ground set {1..n} encoded as
// bitmasks, linear functionals over them, and variable substitution.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcone/rational.hpp"

namespace entcone {

inline constexpr int kMaxVariables = 16;

/// A subset of {1..n}; bit i-1 is set iff variable i belongs to the subset.
class SubsetMask {
public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

    /// Builds a mask from 1-based variable indices.
    static SubsetMask of(std::initializer_list<int> variables);
    static SubsetMask of(std::span<const int> variables);
    static constexpr SubsetMask full(int n) { return SubsetMask((1u << n) - 1u); }
    static constexpr SubsetMask single(int variable) { return SubsetMask(1u << (variable - 1)); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int variable) const { return (bits_ >> (variable - 1)) & 1u; }
    constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    int size() const;
    /// Largest variable index present, 0 for the empty set.
    int max_variable() const;
    std::vector<int> variables() const;

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }

    constexpr auto operator<=>(const SubsetMask&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// Comma-separated sorted variable list, e.g. "1,3,4"; empty set gives "".
std::string subset_key(SubsetMask set);
SubsetMask parse_subset_key(std::string_view key);

/// All subsets of `set`, in ascending bitmask order.
std::vector<SubsetMask> subsets_of(SubsetMask set);

enum class Relation { ge, eq };

/// Rational linear functional on R^{P(N)} together with a relation (>= 0 or = 0).
/// Coefficients are stored densely, indexed by bitmask; index 0 (the empty set)
/// is always zero.
class LinForm {
public:
    LinForm() = default;
    explicit LinForm(int n, Relation relation = Relation::ge);
    LinForm(int n, std::initializer_list<std::pair<SubsetMask, Rational>> terms,
            Relation relation = Relation::ge);

    int n() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    Relation relation() const { return relation_; }
    void set_relation(Relation relation) { relation_ = relation; }

    const Rational& operator[](SubsetMask set) const { return coeffs_.at(set.bits()); }
    void set(SubsetMask set, const Rational& value);
    void add(SubsetMask set, const Rational& value);

    std::span<const Rational> coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// Number of nonzero coefficients.
    int support_size() const;

    LinForm operator-() const;

    friend bool operator==(const LinForm&, const LinForm&) = default;

private:
    int n_ = 0;
    Relation relation_ = Relation::ge;
    RationalVector coeffs_;
};

/// A point of R^{P(N)}; values[empty] is always zero.
class EntVector {
public:
    EntVector() = default;
    explicit EntVector(int n);
    EntVector(int n, std::initializer_list<std::pair<SubsetMask, Rational>> values);
    /// Takes a dense value array of length 2^n; entry 0 must be zero.
    EntVector(int n, RationalVector values);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](SubsetMask set) const { return values_.at(set.bits()); }
    void set(SubsetMask set, const Rational& value);
    std::span<const Rational> values() const { return values_; }
    bool is_zero() const;

    friend bool operator==(const EntVector&, const EntVector&) = default;

private:
    int n_ = 0;
    RationalVector values_;
};

void check_ground_size(int n);

Rational evaluate(const LinForm& f, const EntVector& v);

/// Integer coefficients with gcd 1, same relation. The zero functional is
/// returned unchanged.
LinForm canonicalize(const LinForm& f);

/// Lexicographic comparison of coefficient sequences in ascending bitmask order.
std::strong_ordering lex_compare(const LinForm& a, const LinForm& b);

/// Variable map: `map[i-1]` is the image of variable i (1-based). Must be
/// injective with images in {1..n_target}.
using VariableMap = std::vector<int>;

/// Renames variables: the coordinate I maps to map(I). The result lives in
/// n_target variables and is canonicalized.
LinForm substitute(const LinForm& f, const VariableMap& map, int n_target);
EntVector permute(const EntVector& v, const VariableMap& permutation);

VariableMap inverse_permutation(const VariableMap& permutation);

/// Every injective map {1..m} -> {1..n}, in lexicographic order.
std::vector<VariableMap> injective_maps(int m, int n);

/// Block map: `map[i-1]` is the joint variable replacing variable i. Blocks
/// must be nonempty and pairwise disjoint; singleton blocks give an injective
/// renaming.
using BlockMap = std::vector<SubsetMask>;

LinForm substitute(const LinForm& f, const BlockMap& map, int n_target);

/// Every block map {1..m} -> disjoint nonempty subsets of {1..n}.
std::vector<BlockMap> block_maps(int m, int n);

/// Distinct canonical forms of `f` under all block maps into n_target
/// variables, sorted by lex_compare. When n_target equals f.n() these are the
/// permuted forms.
std::vector<LinForm> substituted_forms(const LinForm& f, int n_target);

/// Lexicographically smallest canonical form over all variable permutations.
LinForm orbit_canonical(const LinForm& f);

/// Identity embedding into a larger ground set (coordinates keep their masks).
LinForm lift(const LinForm& f, int n_target);
EntVector lift(const EntVector& v, int n_target);

}  // namespace entcone
