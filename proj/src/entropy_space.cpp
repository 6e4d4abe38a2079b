#include "entcone/entropy_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace entcone {

SubsetMask SubsetMask::of(std::initializer_list<int> variables)
{
    return of(std::span<const int>(variables.begin(), variables.size()));
}

SubsetMask SubsetMask::of(std::span<const int> variables)
{
    std::uint32_t bits = 0;
    for (int v : variables) {
        if (v < 1 || v > kMaxVariables)
            throw std::out_of_range("variable index out of range: " + std::to_string(v));
        bits |= 1u << (v - 1);
    }
    return SubsetMask(bits);
}

int SubsetMask::size() const { return std::popcount(bits_); }

int SubsetMask::max_variable() const { return 32 - std::countl_zero(bits_); }

std::vector<int> SubsetMask::variables() const
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if ((bits_ >> i) & 1u)
            out.push_back(i + 1);
    }
    return out;
}

std::string subset_key(SubsetMask set)
{
    std::string out;
    for (int v : set.variables()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(v);
    }
    return out;
}

SubsetMask parse_subset_key(std::string_view key)
{
    std::vector<int> vars;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t comma = key.find(',', pos);
        if (comma == std::string_view::npos)
            comma = key.size();
        std::string token(key.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token.empty() || !std::all_of(token.begin(), token.end(),
                                          [](unsigned char c) { return std::isdigit(c); }))
            throw std::invalid_argument("malformed subset key: \"" + std::string(key) + "\"");
        vars.push_back(std::stoi(token));
        pos = comma + 1;
    }
    return SubsetMask::of(vars);
}

std::vector<SubsetMask> subsets_of(SubsetMask set)
{
    // Enumerates submasks in ascending order.
    std::vector<SubsetMask> out;
    std::uint32_t sub = 0;
    const std::uint32_t full = set.bits();
    while (true) {
        out.emplace_back(sub);
        if (sub == full)
            break;
        sub = (sub - full) & full;
    }
    return out;
}

void check_ground_size(int n)
{
    if (n < 1 || n > kMaxVariables)
        throw std::out_of_range("ground-set size must be in 1.." + std::to_string(kMaxVariables) +
                                ", got " + std::to_string(n));
}

LinForm::LinForm(int n, Relation relation) : n_(n), relation_(relation)
{
    check_ground_size(n);
    coeffs_.resize(std::size_t{1} << n);
}

LinForm::LinForm(int n, std::initializer_list<std::pair<SubsetMask, Rational>> terms,
                 Relation relation)
    : LinForm(n, relation)
{
    for (const auto& [set, value] : terms)
        add(set, value);
}

void LinForm::set(SubsetMask set, const Rational& value)
{
    if (set.bits() >= coeffs_.size())
        throw std::out_of_range("coordinate " + subset_key(set) + " outside ground set of size " +
                                std::to_string(n_));
    if (set.empty()) {
        if (sgn(value) != 0)
            throw std::invalid_argument("coefficient of the empty set must be zero");
        return;
    }
    coeffs_[set.bits()] = value;
    // GMP arithmetic assumes lowest terms; callers may build p/q unreduced.
    coeffs_[set.bits()].canonicalize();
}

void LinForm::add(SubsetMask set, const Rational& value)
{
    if (set.bits() >= coeffs_.size())
        throw std::out_of_range("coordinate " + subset_key(set) + " outside ground set of size " +
                                std::to_string(n_));
    // x_empty is identically zero, so terms on it vanish.
    if (set.empty())
        return;
    Rational term = value;
    term.canonicalize();
    coeffs_[set.bits()] += term;
}

bool LinForm::is_zero() const { return entcone::is_zero(std::span<const Rational>(coeffs_)); }

int LinForm::support_size() const
{
    return static_cast<int>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                          [](const Rational& c) { return sgn(c) != 0; }));
}

LinForm LinForm::operator-() const
{
    LinForm out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

EntVector::EntVector(int n) : n_(n)
{
    check_ground_size(n);
    values_.resize(std::size_t{1} << n);
}

EntVector::EntVector(int n, std::initializer_list<std::pair<SubsetMask, Rational>> values)
    : EntVector(n)
{
    for (const auto& [set, value] : values)
        this->set(set, value);
}

EntVector::EntVector(int n, RationalVector values) : n_(n), values_(std::move(values))
{
    check_ground_size(n);
    if (values_.size() != (std::size_t{1} << n))
        throw std::invalid_argument("entropy vector has wrong length");
    for (auto& v : values_)
        v.canonicalize();
    if (sgn(values_[0]) != 0)
        throw std::invalid_argument("entropy vector must vanish on the empty set");
}

void EntVector::set(SubsetMask set, const Rational& value)
{
    if (set.bits() >= values_.size())
        throw std::out_of_range("coordinate " + subset_key(set) + " outside ground set of size " +
                                std::to_string(n_));
    if (set.empty()) {
        if (sgn(value) != 0)
            throw std::invalid_argument("value on the empty set must be zero");
        return;
    }
    values_[set.bits()] = value;
    values_[set.bits()].canonicalize();
}

bool EntVector::is_zero() const { return entcone::is_zero(std::span<const Rational>(values_)); }

Rational evaluate(const LinForm& f, const EntVector& v)
{
    if (f.n() != v.n())
        throw std::invalid_argument("evaluate: functional over " + std::to_string(f.n()) +
                                    " variables applied to vector over " + std::to_string(v.n()));
    return dot(f.coeffs(), v.values());
}

LinForm canonicalize(const LinForm& f)
{
    if (f.is_zero())
        return f;
    IntegerVector scaled = primitive_integer(f.coeffs());
    LinForm out(f.n(), f.relation());
    for (std::size_t i = 1; i < scaled.size(); ++i) {
        if (sgn(scaled[i]) != 0)
            out.set(SubsetMask(static_cast<std::uint32_t>(i)), Rational(scaled[i]));
    }
    return out;
}

std::strong_ordering lex_compare(const LinForm& a, const LinForm& b)
{
    if (a.n() != b.n())
        return a.n() <=> b.n();
    auto ca = a.coeffs();
    auto cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.relation() != b.relation())
        return a.relation() == Relation::ge ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

void check_map(const VariableMap& map, int n_target)
{
    std::uint32_t seen = 0;
    for (int image : map) {
        if (image < 1 || image > n_target)
            throw std::invalid_argument("variable map image out of range");
        if ((seen >> (image - 1)) & 1u)
            throw std::invalid_argument("variable map is not injective");
        seen |= 1u << (image - 1);
    }
}

std::uint32_t map_mask(std::uint32_t bits, const VariableMap& map)
{
    std::uint32_t out = 0;
    while (bits != 0) {
        int i = std::countr_zero(bits);
        bits &= bits - 1;
        out |= 1u << (map[i] - 1);
    }
    return out;
}

}  // namespace

LinForm substitute(const LinForm& f, const VariableMap& map, int n_target)
{
    if (static_cast<int>(map.size()) != f.n())
        throw std::invalid_argument("variable map size differs from functional dimension");
    check_ground_size(n_target);
    check_map(map, n_target);
    LinForm out(n_target, f.relation());
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0)
            out.set(SubsetMask(map_mask(i, map)), c[i]);
    }
    return canonicalize(out);
}

EntVector permute(const EntVector& v, const VariableMap& permutation)
{
    if (static_cast<int>(permutation.size()) != v.n())
        throw std::invalid_argument("permutation size differs from vector dimension");
    check_map(permutation, v.n());
    EntVector out(v.n());
    auto values = v.values();
    for (std::uint32_t i = 1; i < values.size(); ++i)
        out.set(SubsetMask(map_mask(i, permutation)), values[i]);
    return out;
}

VariableMap inverse_permutation(const VariableMap& permutation)
{
    check_map(permutation, static_cast<int>(permutation.size()));
    VariableMap inv(permutation.size());
    for (std::size_t i = 0; i < permutation.size(); ++i)
        inv[permutation[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::vector<VariableMap> injective_maps(int m, int n)
{
    if (m < 0 || m > n)
        throw std::invalid_argument("no injective maps from a larger set");
    std::vector<VariableMap> out;
    VariableMap current;
    std::vector<bool> used(n + 1, false);
    auto recurse = [&](auto& self) -> void {
        if (static_cast<int>(current.size()) == m) {
            out.push_back(current);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            current.push_back(v);
            self(self);
            current.pop_back();
            used[v] = false;
        }
    };
    recurse(recurse);
    return out;
}

LinForm substitute(const LinForm& f, const BlockMap& map, int n_target)
{
    if (static_cast<int>(map.size()) != f.n())
        throw std::invalid_argument("block map size differs from functional dimension");
    check_ground_size(n_target);
    std::uint32_t used = 0;
    for (SubsetMask block : map) {
        if (block.empty() || block.max_variable() > n_target || (block.bits() & used) != 0)
            throw std::invalid_argument("blocks must be nonempty, disjoint and in range");
        used |= block.bits();
    }
    LinForm out(n_target, f.relation());
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) == 0)
            continue;
        std::uint32_t image = 0;
        for (std::uint32_t bits = i; bits != 0; bits &= bits - 1)
            image |= map[std::countr_zero(bits)].bits();
        out.set(SubsetMask(image), c[i]);
    }
    return canonicalize(out);
}

std::vector<BlockMap> block_maps(int m, int n)
{
    check_ground_size(n);
    if (m < 0 || m > n)
        throw std::invalid_argument("no block maps from a larger set");
    std::vector<BlockMap> out;
    BlockMap current;
    const std::uint32_t full = SubsetMask::full(n).bits();
    auto recurse = [&](auto& self, std::uint32_t used) -> void {
        const int left = m - static_cast<int>(current.size());
        if (left == 0) {
            out.push_back(current);
            return;
        }
        if (std::popcount(full & ~used) < left)
            return;
        for (std::uint32_t b = 1; b <= full; ++b) {
            if ((b & used) != 0)
                continue;
            current.emplace_back(b);
            self(self, used | b);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<LinForm> substituted_forms(const LinForm& f, int n_target)
{
    std::vector<LinForm> out;
    for (const auto& map : block_maps(f.n(), n_target))
        out.push_back(substitute(f, map, n_target));
    std::sort(out.begin(), out.end(),
              [](const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinForm orbit_canonical(const LinForm& f)
{
    LinForm canonical = canonicalize(f);
    const int m = f.n();
    if (m > 8)
        throw std::invalid_argument("orbit_canonical supports at most 8 variables");
    const std::size_t dim = canonical.size();
    auto src = canonical.coeffs();

    VariableMap perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    RationalVector best(src.begin(), src.end());
    RationalVector candidate(dim);
    do {
        for (std::uint32_t i = 0; i < dim; ++i)
            candidate[map_mask(i, perm)] = src[i];
        if (std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(),
                                         best.end()))
            best.swap(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));

    LinForm out(m, f.relation());
    for (std::uint32_t i = 1; i < dim; ++i)
        out.set(SubsetMask(i), best[i]);
    return out;
}

LinForm lift(const LinForm& f, int n_target)
{
    if (n_target < f.n())
        throw std::invalid_argument("lift: target ground set is smaller");
    LinForm out(n_target, f.relation());
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i)
        out.set(SubsetMask(i), c[i]);
    return out;
}

EntVector lift(const EntVector& v, int n_target)
{
    if (n_target < v.n())
        throw std::invalid_argument("lift: target ground set is smaller");
    EntVector out(n_target);
    auto c = v.values();
    for (std::uint32_t i = 1; i < c.size(); ++i)
        out.set(SubsetMask(i), c[i]);
    return out;
}

}  // namespace entcone
