#include "entcone/projection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "entcone/double_description.hpp"

namespace entcone {

namespace {

/// Reduced row echelon basis of a subspace of Q^dim.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Returns false if `v` already lies in the span.
    bool add(RationalVector v)
    {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < dim_ && sgn(v[p]) == 0)
            ++p;
        if (p == dim_)
            return false;
        const Rational inv = 1 / v[p];
        for (auto& x : v)
            x *= inv;
        for (auto& row : rows_) {
            if (sgn(row[p]) == 0)
                continue;
            const Rational f = row[p];
            for (std::size_t j = 0; j < dim_; ++j) {
                if (sgn(v[j]) != 0)
                    row[j] -= f * v[j];
            }
        }
        // Keep rows ordered by pivot column.
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        const auto at = pos - pivots_.begin();
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + at, std::move(v));
        return true;
    }

    RationalVector reduce(RationalVector v) const
    {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (sgn(v[p]) == 0)
                continue;
            const Rational f = v[p];
            for (std::size_t j = 0; j < dim_; ++j) {
                if (sgn(rows_[k][j]) != 0)
                    v[j] -= f * rows_[k][j];
            }
        }
        return v;
    }

    const std::vector<RationalVector>& rows() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

RationalVector dense(const LinForm& f) { return RationalVector(f.coeffs().begin(), f.coeffs().end()); }

LinForm form_from(int n, std::span<const Rational> coeffs, Relation rel)
{
    LinForm f(n, rel);
    for (std::uint32_t i = 1; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0)
            f.set(SubsetMask(i), coeffs[i]);
    }
    return canonicalize(f);
}

bool lex_less(const LinForm& a, const LinForm& b) { return lex_compare(a, b) < 0; }

/// Support masks in ascending order, for insertion ordering.
std::vector<std::uint32_t> support_of(const LinForm& f)
{
    std::vector<std::uint32_t> out;
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0)
            out.push_back(i);
    }
    return out;
}

std::uint32_t compress_mask(std::uint32_t bits, SubsetMask vars)
{
    std::uint32_t out = 0;
    int t = 0;
    for (int v : vars.variables()) {
        if ((bits >> (v - 1)) & 1u)
            out |= 1u << t;
        ++t;
    }
    return out;
}

std::uint32_t expand_mask(std::uint32_t bits, SubsetMask vars)
{
    std::uint32_t out = 0;
    int t = 0;
    for (int v : vars.variables()) {
        if ((bits >> t) & 1u)
            out |= 1u << (v - 1);
        ++t;
    }
    return out;
}

/// Line key: primitive with first nonzero entry positive.
IntegerVector line_key(IntegerVector v)
{
    make_primitive(v);
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            if (sgn(x) < 0) {
                for (auto& y : v)
                    y = -y;
            }
            break;
        }
    }
    return v;
}

}  // namespace

std::vector<SubsetMask> coordinates_of(SubsetMask vars)
{
    std::vector<SubsetMask> out = subsets_of(vars);
    out.erase(out.begin());
    return out;
}

std::vector<EntVector> dd_rays(const Cone& cone)
{
    check_ground_size(cone.n);
    const std::size_t size = std::size_t{1} << cone.n;
    const std::size_t d = size - 1;
    auto to_int = [&](const LinForm& f) {
        if (f.n() != cone.n)
            throw std::invalid_argument("dd_rays: constraint dimension differs from cone");
        IntegerVector full = primitive_integer(f.coeffs());
        return IntegerVector(full.begin() + 1, full.end());
    };

    DoubleDescription dd(d);
    for (const auto& g : cone.eqs)
        dd.add_equality(to_int(g));

    std::vector<std::size_t> order(cone.ineqs.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::vector<std::vector<std::uint32_t>> supports;
    supports.reserve(cone.ineqs.size());
    for (const auto& f : cone.ineqs)
        supports.push_back(support_of(f));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (supports[a].size() != supports[b].size())
            return supports[a].size() < supports[b].size();
        return supports[a] < supports[b];
    });
    for (std::size_t i : order)
        dd.add_inequality(to_int(cone.ineqs[i]));

    auto to_vector = [&](const IntegerVector& v) {
        RationalVector values(size);
        for (std::size_t i = 0; i < d; ++i)
            values[i + 1] = v[i];
        return EntVector(cone.n, std::move(values));
    };
    std::vector<EntVector> out;
    for (const auto& r : dd.rays())
        out.push_back(to_vector(r));
    for (const auto& l : dd.lines()) {
        out.push_back(to_vector(l));
        IntegerVector neg = l;
        for (auto& x : neg)
            x = -x;
        out.push_back(to_vector(neg));
    }
    std::sort(out.begin(), out.end(), [](const EntVector& a, const EntVector& b) {
        return std::lexicographical_compare(a.values().begin(), a.values().end(),
                                            b.values().begin(), b.values().end());
    });
    return out;
}

std::vector<LinForm> remove_redundant(std::span<const LinForm> ineqs, std::span<const LinForm> eqs,
                                      PivotRule rule)
{
    std::vector<RationalVector> columns;
    columns.reserve(ineqs.size());
    for (const auto& f : ineqs)
        columns.push_back(dense(f));
    std::vector<RationalVector> free_cols;
    free_cols.reserve(eqs.size());
    for (const auto& g : eqs)
        free_cols.push_back(dense(g));

    std::vector<bool> alive(ineqs.size(), true);
    FarkasSolver solver(rule);
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        std::vector<RationalVector> others;
        others.reserve(ineqs.size());
        for (std::size_t j = 0; j < ineqs.size(); ++j) {
            if (j != i && alive[j])
                others.push_back(columns[j]);
        }
        if (solver.solve(others, free_cols, columns[i]).feasible)
            alive[i] = false;
    }
    std::vector<LinForm> out;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        if (alive[i])
            out.push_back(ineqs[i]);
    }
    return out;
}

Cone normalize(const Cone& cone)
{
    check_ground_size(cone.n);
    const std::size_t size = std::size_t{1} << cone.n;

    std::vector<RationalVector> eq_rows;
    for (const auto& g : cone.eqs)
        eq_rows.push_back(dense(g));
    std::vector<RationalVector> ineq_rows;
    for (const auto& f : cone.ineqs)
        ineq_rows.push_back(dense(f));

    while (true) {
        EchelonBasis basis(size);
        for (const auto& row : eq_rows)
            basis.add(row);
        eq_rows = basis.rows();

        std::vector<LinForm> reduced;
        std::set<LinForm, decltype(&lex_less)> seen(&lex_less);
        for (const auto& row : ineq_rows) {
            LinForm f = form_from(cone.n, basis.reduce(row), Relation::ge);
            if (f.is_zero())
                continue;
            if (seen.insert(f).second)
                reduced.push_back(std::move(f));
        }

        // An inequality whose negation is implied holds with equality.
        std::vector<RationalVector> columns;
        for (const auto& f : reduced)
            columns.push_back(dense(f));
        FarkasSolver solver;
        std::size_t implicit = reduced.size();
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            RationalVector neg = columns[i];
            for (auto& x : neg)
                x = -x;
            if (solver.solve(columns, eq_rows, neg).feasible) {
                implicit = i;
                break;
            }
        }
        if (implicit != reduced.size()) {
            eq_rows.push_back(columns[implicit]);
            ineq_rows = std::move(columns);
            continue;
        }

        std::vector<LinForm> eq_forms;
        for (const auto& row : eq_rows)
            eq_forms.push_back(form_from(cone.n, row, Relation::eq));
        std::vector<LinForm> kept = remove_redundant(reduced, eq_forms);
        std::sort(kept.begin(), kept.end(), lex_less);

        Cone out(cone.n);
        out.ineqs = std::move(kept);
        out.eqs = std::move(eq_forms);
        return out;
    }
}

Cone fm_eliminate(const Cone& cone, std::span<const SubsetMask> drop)
{
    check_ground_size(cone.n);
    const std::size_t size = std::size_t{1} << cone.n;
    std::vector<std::uint32_t> order;
    for (SubsetMask s : drop) {
        if (s.empty() || s.bits() >= size)
            throw std::invalid_argument("fm_eliminate: coordinate outside ground set");
        order.push_back(s.bits());
    }
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    if (order.size() == size - 1)
        throw std::invalid_argument("fm_eliminate: no coordinates would remain");

    std::vector<RationalVector> ineqs, eqs;
    for (const auto& f : cone.ineqs)
        ineqs.push_back(dense(f));
    for (const auto& g : cone.eqs)
        eqs.push_back(dense(g));

    auto axpy = [&](RationalVector& v, const Rational& f, const RationalVector& w) {
        for (std::size_t j = 0; j < size; ++j) {
            if (sgn(w[j]) != 0)
                v[j] += f * w[j];
        }
    };

    for (std::uint32_t c : order) {
        auto eq_it = std::find_if(eqs.begin(), eqs.end(),
                                  [&](const RationalVector& e) { return sgn(e[c]) != 0; });
        if (eq_it != eqs.end()) {
            RationalVector e = std::move(*eq_it);
            eqs.erase(eq_it);
            for (auto& g : eqs) {
                if (sgn(g[c]) != 0)
                    axpy(g, -g[c] / e[c], e);
            }
            for (auto& f : ineqs) {
                if (sgn(f[c]) != 0)
                    axpy(f, -f[c] / e[c], e);
            }
        } else {
            std::vector<RationalVector> next;
            std::vector<const RationalVector*> pos, neg;
            for (const auto& f : ineqs) {
                const int s = sgn(f[c]);
                if (s == 0)
                    next.push_back(f);
                else
                    (s > 0 ? pos : neg).push_back(&f);
            }
            for (const auto* p : pos) {
                for (const auto* q : neg) {
                    RationalVector combo(size);
                    const Rational a = (*p)[c];
                    const Rational b = -(*q)[c];
                    for (std::size_t j = 0; j < size; ++j)
                        combo[j] = a * (*q)[j] + b * (*p)[j];
                    next.push_back(std::move(combo));
                }
            }
            ineqs = std::move(next);
        }

        std::vector<LinForm> forms;
        std::set<LinForm, decltype(&lex_less)> seen(&lex_less);
        for (const auto& row : ineqs) {
            LinForm f = form_from(cone.n, row, Relation::ge);
            if (f.is_zero())
                continue;
            if (seen.insert(f).second)
                forms.push_back(std::move(f));
        }
        std::vector<LinForm> eq_forms;
        for (const auto& row : eqs) {
            LinForm g = form_from(cone.n, row, Relation::eq);
            if (!g.is_zero())
                eq_forms.push_back(std::move(g));
        }
        forms = remove_redundant(forms, eq_forms);
        ineqs.clear();
        for (const auto& f : forms)
            ineqs.push_back(dense(f));
        eqs.clear();
        for (const auto& g : eq_forms)
            eqs.push_back(dense(g));
    }

    Cone out(cone.n);
    for (const auto& row : ineqs)
        out.ineqs.push_back(form_from(cone.n, row, Relation::ge));
    for (const auto& row : eqs)
        out.eqs.push_back(form_from(cone.n, row, Relation::eq));
    return normalize(out);
}

ProjectionResult chm_project(const Cone& cone, std::span<const SubsetMask> keep,
                             const ChmOptions& options)
{
    check_ground_size(cone.n);
    const std::size_t size = std::size_t{1} << cone.n;
    std::vector<std::uint32_t> kept;
    for (SubsetMask s : keep) {
        if (s.empty() || s.bits() >= size)
            throw std::invalid_argument("chm_project: kept coordinate outside ground set");
        kept.push_back(s.bits());
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty())
        throw std::invalid_argument("chm_project: degenerate keep set");
    const std::size_t k = kept.size();
    std::vector<SubsetMask> kept_masks;
    for (auto b : kept)
        kept_masks.emplace_back(b);

    auto log = [&](const std::string& msg) {
        if (options.log)
            options.log(msg);
    };

    std::vector<RationalVector> columns, free_cols;
    for (const auto& f : cone.ineqs) {
        if (f.n() != cone.n)
            throw std::invalid_argument("chm_project: constraint dimension differs from cone");
        columns.push_back(dense(f));
    }
    for (const auto& g : cone.eqs) {
        if (g.n() != cone.n)
            throw std::invalid_argument("chm_project: constraint dimension differs from cone");
        free_cols.push_back(dense(g));
    }

    ProjectionResult result;
    FarkasSolver solver(options.rule);
    auto lift_target = [&](const IntegerVector& a) {
        RationalVector t(size);
        for (std::size_t i = 0; i < k; ++i)
            t[kept[i]] = a[i];
        return t;
    };
    auto run_lp = [&](const RationalVector& target) {
        if (options.max_lp_calls != 0 && result.stats.lp_calls >= options.max_lp_calls)
            throw ProjectionBudgetExceeded("convex hull method exceeded its LP budget of " +
                                           std::to_string(options.max_lp_calls) + " calls");
        ++result.stats.lp_calls;
        return solver.solve(columns, free_cols, target);
    };

    DoubleDescription hull_dual(k);
    auto add_generator = [&](std::span<const Rational> point) {
        RationalVector projected(k);
        for (std::size_t i = 0; i < k; ++i)
            projected[i] = point[kept[i]];
        IntegerVector g = primitive_integer(projected);
        if (is_zero(std::span<const Integer>(g)))
            throw std::logic_error("chm_project: refuting point projects to zero");
        hull_dual.add_inequality(g);
        ++result.stats.generators;
    };

    for (const auto& v : options.warm_start) {
        if (v.n() != cone.n)
            throw std::invalid_argument("chm_project: warm-start point has wrong dimension");
        if (options.check_warm_start && !point_in_projection(cone, kept_masks, v))
            throw std::invalid_argument("chm_project: warm-start point outside the projection");
        if (!v.is_zero())
            add_generator(v.values());
    }

    // Affine hull: every remaining line of the dual is a candidate equality.
    std::set<IntegerVector> confirmed_lines;
    while (true) {
        const IntegerVector* candidate = nullptr;
        IntegerVector key;
        for (const auto& l : hull_dual.lines()) {
            key = line_key(l);
            if (!confirmed_lines.contains(key)) {
                candidate = &l;
                break;
            }
        }
        if (candidate == nullptr)
            break;
        IntegerVector line = *candidate;
        FarkasResult up = run_lp(lift_target(line));
        if (!up.feasible) {
            add_generator(up.dual_ray);
            continue;
        }
        for (auto& x : line)
            x = -x;
        FarkasResult down = run_lp(lift_target(line));
        if (!down.feasible) {
            add_generator(down.dual_ray);
            continue;
        }
        confirmed_lines.insert(key);
    }
    EchelonBasis equalities(k);
    for (const auto& l : hull_dual.lines())
        equalities.add(to_rational(l));
    log("chm: projection has dimension " + std::to_string(k - hull_dual.lines().size()) +
        " after " + std::to_string(result.stats.lp_calls) + " LPs");

    struct Confirmed {
        IntegerVector facet;
        Certificate certificate;
    };
    std::map<IntegerVector, Confirmed> confirmed;
    std::size_t last_report = 0;
    while (true) {
        std::size_t candidate = hull_dual.ray_count();
        for (std::size_t i = 0; i < hull_dual.ray_count(); ++i) {
            if (!confirmed.contains(hull_dual.ray(i))) {
                candidate = i;
                break;
            }
        }
        if (candidate == hull_dual.ray_count())
            break;
        IntegerVector facet =
            primitive_integer(equalities.reduce(to_rational(hull_dual.ray(candidate))));
        const RationalVector target = lift_target(facet);
        FarkasResult lp = run_lp(target);
        if (lp.feasible) {
            Certificate cert;
            cert.target = form_from(cone.n, target, Relation::ge);
            for (std::size_t i = 0; i < lp.nonneg_multipliers.size(); ++i) {
                if (sgn(lp.nonneg_multipliers[i]) != 0)
                    cert.ineq_multipliers.emplace(i, lp.nonneg_multipliers[i]);
            }
            for (std::size_t j = 0; j < lp.free_multipliers.size(); ++j) {
                if (sgn(lp.free_multipliers[j]) != 0)
                    cert.eq_multipliers.emplace(j, lp.free_multipliers[j]);
            }
            confirmed.emplace(hull_dual.ray(candidate), Confirmed{std::move(facet), std::move(cert)});
        } else {
            add_generator(lp.dual_ray);
        }
        if (result.stats.lp_calls >= last_report + 50) {
            last_report = result.stats.lp_calls;
            std::ostringstream msg;
            msg << "chm: " << result.stats.lp_calls << " LPs, " << result.stats.generators
                << " generators, " << hull_dual.ray_count() << " candidate facets, "
                << confirmed.size() << " confirmed";
            log(msg.str());
        }
    }
    result.stats.pivots = solver.total_pivots();

    // Assemble the output pair in canonical order.
    std::vector<std::pair<LinForm, Certificate>> facets;
    for (std::size_t i = 0; i < hull_dual.ray_count(); ++i) {
        auto& c = confirmed.at(hull_dual.ray(i));
        facets.emplace_back(form_from(cone.n, lift_target(c.facet), Relation::ge),
                            std::move(c.certificate));
    }
    std::sort(facets.begin(), facets.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    Cone out(cone.n);
    for (auto& [f, cert] : facets) {
        out.ineqs.push_back(f);
        result.certificates.push_back(std::move(cert));
    }
    for (const auto& row : equalities.rows()) {
        RationalVector full(size);
        for (std::size_t i = 0; i < k; ++i)
            full[kept[i]] = row[i];
        out.eqs.push_back(form_from(cone.n, full, Relation::eq));
    }

    // Extreme rays of the projection, restricted to the kept coordinates.
    {
        DoubleDescription primal(k);
        auto restrict = [&](const LinForm& f) {
            IntegerVector v(k);
            IntegerVector full = primitive_integer(f.coeffs());
            for (std::size_t i = 0; i < k; ++i)
                v[i] = full[kept[i]];
            return v;
        };
        for (const auto& g : out.eqs)
            primal.add_equality(restrict(g));
        for (const auto& f : out.ineqs)
            primal.add_inequality(restrict(f));
        std::vector<IntegerVector> gens = primal.rays();
        for (const auto& l : primal.lines()) {
            gens.push_back(l);
            IntegerVector neg = l;
            for (auto& x : neg)
                x = -x;
            gens.push_back(std::move(neg));
        }
        std::vector<EntVector> rays;
        for (const auto& g : gens) {
            RationalVector values(size);
            for (std::size_t i = 0; i < k; ++i)
                values[kept[i]] = g[i];
            rays.emplace_back(cone.n, std::move(values));
        }
        std::sort(rays.begin(), rays.end(), [](const EntVector& a, const EntVector& b) {
            return std::lexicographical_compare(a.values().begin(), a.values().end(),
                                                b.values().begin(), b.values().end());
        });
        if (options.certify_rays) {
            for (const auto& r : rays) {
                if (!point_in_projection(cone, kept_masks, r))
                    throw std::logic_error("chm_project: output ray failed the membership LP");
            }
        }
        out.rays = std::move(rays);
    }
    log("chm: done, " + std::to_string(out.ineqs.size()) + " facets, " +
        std::to_string(out.rays->size()) + " rays, " + std::to_string(result.stats.lp_calls) +
        " LPs");
    result.cone = std::move(out);
    return result;
}

LinForm compress(const LinForm& f, SubsetMask vars)
{
    const int m = vars.size();
    LinForm out(m, f.relation());
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) == 0)
            continue;
        if (!SubsetMask(i).is_subset_of(vars))
            throw std::invalid_argument("compress: form has support outside the kept variables");
        out.set(SubsetMask(compress_mask(i, vars)), c[i]);
    }
    return out;
}

LinForm expand(const LinForm& f, SubsetMask vars, int n_target)
{
    if (f.n() != vars.size())
        throw std::invalid_argument("expand: form size differs from variable count");
    LinForm out(n_target, f.relation());
    auto c = f.coeffs();
    for (std::uint32_t i = 1; i < c.size(); ++i) {
        if (sgn(c[i]) != 0)
            out.set(SubsetMask(expand_mask(i, vars)), c[i]);
    }
    return out;
}

EntVector expand(const EntVector& v, SubsetMask vars, int n_target)
{
    if (v.n() != vars.size())
        throw std::invalid_argument("expand: vector size differs from variable count");
    EntVector out(n_target);
    auto c = v.values();
    for (std::uint32_t i = 1; i < c.size(); ++i)
        out.set(SubsetMask(expand_mask(i, vars)), c[i]);
    return out;
}

ProjectionResult chm_project_vars(const Cone& cone, SubsetMask vars, const ChmOptions& options)
{
    if (vars.empty() || vars.max_variable() > cone.n)
        throw std::invalid_argument("chm_project_vars: degenerate variable set");
    ChmOptions inner = options;
    inner.warm_start.clear();
    for (const auto& v : options.warm_start)
        inner.warm_start.push_back(expand(v, vars, cone.n));
    const std::vector<SubsetMask> keep = coordinates_of(vars);
    ProjectionResult full = chm_project(cone, keep, inner);

    const int m = vars.size();
    Cone out(m);
    for (const auto& f : full.cone.ineqs)
        out.ineqs.push_back(compress(f, vars));
    for (const auto& g : full.cone.eqs)
        out.eqs.push_back(compress(g, vars));
    std::vector<EntVector> rays;
    for (const auto& r : *full.cone.rays) {
        EntVector c(m);
        for (SubsetMask s : keep)
            c.set(SubsetMask(compress_mask(s.bits(), vars)), r[s]);
        rays.push_back(std::move(c));
    }
    out.rays = std::move(rays);
    full.cone = std::move(out);
    return full;
}

}  // namespace entcone
