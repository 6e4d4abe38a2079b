#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's LP or projection code.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "entcone/copy_lemma.hpp"

namespace oracle {

using entcone::Integer;
using entcone::LinForm;
using entcone::Rational;
using entcone::SubsetMask;

// ---- entropies of rational distributions, exactly ----

/// Finite distribution with rational probabilities over outcomes in
/// {0..alphabet-1}^n. Zero-probability outcomes are not stored.
struct Distribution {
    int n = 0;
    std::map<std::vector<int>, Rational> p;
};

/// sum_q k_q log q over primes q, with rational k_q. Zero iff every k_q is 0,
/// since logarithms of distinct primes are linearly independent over Q.
class LogCombination {
public:
    void add_log(const Integer& value, const Rational& weight);
    LogCombination& operator+=(const LogCombination& other);
    LogCombination scaled(const Rational& factor) const;
    bool is_zero() const { return terms_.empty(); }
    long double value() const;
    /// sum |k_q log q|, the scale against which rounding is judged.
    long double magnitude() const;

private:
    void add_term(const Integer& prime, const Rational& k);
    std::map<Integer, Rational> terms_;
};

/// H(xi_I) = -sum p log p, exactly.
LogCombination entropy(const Distribution& d, SubsetMask set);

/// The value of f at the entropy vector of d, exactly.
LogCombination evaluate_entropic(const LinForm& f, const Distribution& d);

/// f(h_d) >= 0: exact zero, or positive beyond rounding noise.
bool holds_entropically(const LinForm& f, const Distribution& d);

/// Random distribution: alphabet sizes 2..max_alphabet, random small weights
/// (some zero), and some variables fixed as functions of earlier ones.
Distribution random_distribution(int n, int max_alphabet, std::mt19937_64& rng);

/// Adds xi_{n+1}: a copy of xi_k over xi_I, drawn from p(x_k | x_I)
/// independently of everything else given x_I.
Distribution copy_extend(const Distribution& d, const entcone::CopyStep& step);

// ---- numbers in Q(sqrt 2) ----

struct QSqrt2 {
    Rational a;  // a + b sqrt2
    Rational b;
    QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
    QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
    QSqrt2 operator*(const QSqrt2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
};

/// (2 + sqrt2)^s and (2 - sqrt2)^s by binomial expansion.
QSqrt2 s_plus(int s);
QSqrt2 s_minus(int s);

/// Members of the four-variable family evaluated literally, term by term, in
/// Q(sqrt2). Returns nothing if some coefficient is irrational.
std::optional<LinForm> literal_family_member(int s);

// ---- polyhedral references ----

/// Extreme rays of {x : A x >= 0, E x = 0} in R^dim by brute force over
/// subsets of tight constraints. Pointed cones only; rays primitive integer,
/// sorted.
std::vector<std::vector<Integer>> brute_force_rays(const std::vector<std::vector<Rational>>& ineqs,
                                                   const std::vector<std::vector<Rational>>& eqs,
                                                   std::size_t dim);

/// Random cone over n variables: every inequality is nonnegative on a fixed
/// interior point; occasionally an equality through that point.
entcone::Cone random_cone(int n, std::size_t max_constraints, std::mt19937_64& rng);

}  // namespace oracle
