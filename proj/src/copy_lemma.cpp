#include "entcone/copy_lemma.hpp"

#include <set>
#include <stdexcept>

#include "entcone/exact_lp.hpp"
#include "entcone/io.hpp"

namespace entcone {

void CopyStep::validate() const
{
    if (new_var < 2 || new_var > kMaxVariables)
        throw std::invalid_argument("copy step: new variable index out of range");
    const SubsetMask before = SubsetMask::full(new_var - 1);
    if (k < 1 || k >= new_var)
        throw std::invalid_argument("copy step: copied variable must precede the new one");
    const SubsetMask ks = SubsetMask::single(k);
    if (!copied_over.is_subset_of(before) || !kept_apart.is_subset_of(before))
        throw std::invalid_argument("copy step: I and J must precede the new variable");
    if (!(ks & copied_over).empty() || !(ks & kept_apart).empty() ||
        !(copied_over & kept_apart).empty())
        throw std::invalid_argument("copy step: {k}, I and J must be pairwise disjoint");
}

void Scenario::validate() const
{
    check_ground_size(m);
    check_ground_size(n());
    for (std::size_t t = 0; t < steps.size(); ++t) {
        if (steps[t].new_var != m + static_cast<int>(t) + 1)
            throw std::invalid_argument("scenario: step " + std::to_string(t + 1) +
                                        " must introduce variable " +
                                        std::to_string(m + t + 1));
        steps[t].validate();
    }
    for (const auto& f : base_bound) {
        if (f.n() != m)
            throw std::invalid_argument("scenario: base bound must be over m variables");
    }
    for (const auto& g : extra_equalities) {
        if (g.n() > n())
            throw std::invalid_argument("scenario: extra equality references too many variables");
    }
}

std::vector<LinForm> copy_equalities(const CopyStep& step)
{
    step.validate();
    const int n = step.new_var;
    const SubsetMask fresh = SubsetMask::single(step.new_var);
    const SubsetMask ks = SubsetMask::single(step.k);
    const SubsetMask i_set = step.copied_over;
    std::vector<LinForm> out;
    for (SubsetMask i1 : subsets_of(i_set)) {
        LinForm f(n, Relation::eq);
        f.add(fresh | i1, 1);
        f.add(ks | i1, -1);
        out.push_back(canonicalize(f));
    }
    for (SubsetMask j1 : subsets_of(ks | step.kept_apart)) {
        if (j1.empty())
            continue;
        LinForm f(n, Relation::eq);
        f.add(fresh | i_set, 1);
        f.add(i_set | j1, 1);
        f.add(fresh | i_set | j1, -1);
        f.add(i_set, -1);
        out.push_back(canonicalize(f));
    }
    return out;
}

namespace {

bool lex_less(const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; }

}  // namespace

Cone scenario_cone(const Scenario& scenario, const Cone& base)
{
    scenario.validate();
    if (base.n != scenario.m)
        throw std::invalid_argument("scenario_cone: base cone must be over m variables");
    const int n = scenario.n();
    Cone out = shannon_cone(n);

    // Shannon-type members of the base add nothing once embedded in H_n.
    const Cone shannon_m = shannon_cone(scenario.m);
    std::set<LinForm, decltype(&lex_less)> present(&lex_less);
    for (const auto& f : out.ineqs)
        present.insert(f);
    auto embed = [&](const LinForm& f, bool all_maps) {
        if (infer(shannon_m, f).implied)
            return;
        std::vector<LinForm> forms;
        if (all_maps)
            forms = substituted_forms(f, n);
        else
            forms.push_back(canonicalize(lift(f, n)));
        for (auto& g : forms) {
            g.set_relation(Relation::ge);
            if (present.insert(g).second)
                out.ineqs.push_back(std::move(g));
        }
    };
    for (const auto& f : base.ineqs)
        embed(f, true);
    for (const auto& f : scenario.base_bound)
        embed(f, scenario.substituted);

    std::set<LinForm, decltype(&lex_less)> base_eqs(&lex_less);
    for (const auto& g : base.eqs) {
        for (auto& h : substituted_forms(g, n)) {
            h.set_relation(Relation::eq);
            if (base_eqs.insert(h).second)
                out.eqs.push_back(std::move(h));
        }
    }
    for (const auto& step : scenario.steps) {
        for (const auto& g : copy_equalities(step))
            out.eqs.push_back(lift(g, n));
    }
    for (const auto& g : scenario.extra_equalities) {
        LinForm h = canonicalize(lift(g, n));
        h.set_relation(Relation::eq);
        out.eqs.push_back(std::move(h));
    }
    return out;
}

std::vector<LinForm> mmrv_equalities(std::string_view script, int n)
{
    std::vector<LinForm> out;
    for (auto& f : parse_forms(script)) {
        if (f.n() > n)
            throw std::invalid_argument("equality script references more than " +
                                        std::to_string(n) + " variables");
        if (f.relation() != Relation::eq)
            throw std::invalid_argument("equality script contains an inequality record");
        out.push_back(canonicalize(lift(f, n)));
    }
    return out;
}

}  // namespace entcone
