#include "entcone/shannon_cone.hpp"

#include <set>
#include <stdexcept>

namespace entcone {

Cone::Cone(int n) : n(n) { check_ground_size(n); }

void Cone::add_inequality(LinForm f)
{
    if (f.n() != n)
        throw std::invalid_argument("inequality dimension differs from cone");
    f.set_relation(Relation::ge);
    ineqs.push_back(std::move(f));
    rays.reset();
}

void Cone::add_equality(LinForm f)
{
    if (f.n() != n)
        throw std::invalid_argument("equality dimension differs from cone");
    f.set_relation(Relation::eq);
    eqs.push_back(std::move(f));
    rays.reset();
}

bool Cone::contains(const EntVector& v) const
{
    for (const auto& f : ineqs) {
        if (sgn(evaluate(f, v)) < 0)
            return false;
    }
    for (const auto& g : eqs) {
        if (sgn(evaluate(g, v)) != 0)
            return false;
    }
    return true;
}

void Cone::validate() const
{
    check_ground_size(n);
    for (const auto& f : ineqs) {
        if (f.n() != n || f.relation() != Relation::ge)
            throw std::invalid_argument("malformed cone inequality");
    }
    for (const auto& g : eqs) {
        if (g.n() != n || g.relation() != Relation::eq)
            throw std::invalid_argument("malformed cone equality");
    }
    if (rays) {
        for (const auto& r : *rays) {
            if (r.n() != n)
                throw std::invalid_argument("ray dimension differs from cone");
            if (!contains(r))
                throw std::invalid_argument("ray violates a cone constraint");
        }
    }
}

std::vector<LinForm> elemental_inequalities(int n)
{
    check_ground_size(n);
    const SubsetMask ground = SubsetMask::full(n);
    std::vector<LinForm> out;
    out.reserve(static_cast<std::size_t>(elemental_count(n)));
    for (int i = 1; i <= n; ++i) {
        LinForm f(n);
        f.add(ground, 1);
        f.add(ground.minus(SubsetMask::single(i)), -1);
        out.push_back(canonicalize(f));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const SubsetMask ij = SubsetMask::single(i) | SubsetMask::single(j);
            for (SubsetMask k : subsets_of(ground.minus(ij))) {
                LinForm f(n);
                f.add(k | SubsetMask::single(i), 1);
                f.add(k | SubsetMask::single(j), 1);
                f.add(k | ij, -1);
                f.add(k, -1);
                out.push_back(canonicalize(f));
            }
        }
    }
    return out;
}

Cone shannon_cone(int n)
{
    Cone cone(n);
    cone.ineqs = elemental_inequalities(n);
    return cone;
}

Cone adjoin(const Cone& cone, std::span<const LinForm> extra, bool substituted)
{
    Cone out = cone;
    if (extra.empty())
        return out;
    auto lex_less = [](const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; };
    std::set<LinForm, decltype(lex_less)> present(lex_less);
    for (const auto& f : out.ineqs)
        present.insert(canonicalize(f));

    for (const auto& f : extra) {
        if (f.n() > cone.n)
            throw std::invalid_argument("adjoined inequality has more variables than the cone");
        std::vector<LinForm> forms;
        if (substituted) {
            forms = substituted_forms(f, cone.n);
        } else {
            forms.push_back(canonicalize(lift(f, cone.n)));
        }
        for (auto& g : forms) {
            g.set_relation(Relation::ge);
            if (present.insert(g).second)
                out.ineqs.push_back(g);
        }
    }
    out.rays.reset();
    return out;
}

}  // namespace entcone
