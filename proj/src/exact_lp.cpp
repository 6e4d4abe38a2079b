#include "entcone/exact_lp.hpp"

#include <limits>
#include <stdexcept>

namespace entcone {

namespace {

// Consecutive degenerate pivots tolerated before switching to Bland's rule.
constexpr std::size_t kDegenerateRunLimit = 20;

class Tableau {
public:
    Tableau(std::span<const RationalVector> nonneg, std::span<const RationalVector> free_cols,
            std::span<const Rational> target)
        : num_nonneg_(nonneg.size()), num_free_(free_cols.size())
    {
        const std::size_t dim = target.size();
        for (const auto& c : nonneg) {
            if (c.size() != dim)
                throw std::invalid_argument("Farkas system: column length mismatch");
        }
        for (const auto& c : free_cols) {
            if (c.size() != dim)
                throw std::invalid_argument("Farkas system: column length mismatch");
        }

        // Rows on which every column and the target vanish carry no information.
        for (std::size_t i = 0; i < dim; ++i) {
            bool used = sgn(target[i]) != 0;
            for (std::size_t j = 0; !used && j < nonneg.size(); ++j)
                used = sgn(nonneg[j][i]) != 0;
            for (std::size_t j = 0; !used && j < free_cols.size(); ++j)
                used = sgn(free_cols[j][i]) != 0;
            if (used)
                row_coord_.push_back(i);
        }
        dim_ = dim;
        const std::size_t rows = row_coord_.size();
        num_struct_ = num_nonneg_ + 2 * num_free_;
        num_cols_ = num_struct_ + rows;

        rows_.assign(rows, RationalVector(num_cols_));
        rhs_.resize(rows);
        sign_.resize(rows);
        basis_.resize(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t i = row_coord_[r];
            sign_[r] = sgn(target[i]) < 0 ? -1 : 1;
            auto& row = rows_[r];
            for (std::size_t j = 0; j < num_nonneg_; ++j) {
                if (sgn(nonneg[j][i]) != 0)
                    row[j] = sign_[r] > 0 ? nonneg[j][i] : Rational(-nonneg[j][i]);
            }
            for (std::size_t j = 0; j < num_free_; ++j) {
                if (sgn(free_cols[j][i]) != 0) {
                    Rational v = sign_[r] > 0 ? free_cols[j][i] : Rational(-free_cols[j][i]);
                    row[num_nonneg_ + 2 * j + 1] = -v;
                    row[num_nonneg_ + 2 * j] = std::move(v);
                }
            }
            row[num_struct_ + r] = 1;
            rhs_[r] = abs(target[i]);
            basis_[r] = num_struct_ + r;
        }
        cost_.assign(num_cols_, Rational(0));
        objective_ = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            objective_ += rhs_[r];
            for (std::size_t j = 0; j < num_struct_; ++j) {
                if (sgn(rows_[r][j]) != 0)
                    cost_[j] -= rows_[r][j];
            }
        }
    }

    std::size_t run(PivotRule rule)
    {
        std::size_t pivots = 0;
        std::size_t degenerate_run = 0;
        while (sgn(objective_) > 0) {
            const bool use_bland =
                rule == PivotRule::bland ||
                (rule == PivotRule::dantzig_bland_fallback && degenerate_run >= kDegenerateRunLimit);
            const std::size_t entering = choose_entering(use_bland);
            if (entering == npos)
                break;
            const std::size_t leaving = choose_leaving(entering, rule == PivotRule::dantzig_lex);
            if (leaving == npos)
                throw std::logic_error("phase-one simplex reported an unbounded ray");
            if (sgn(rhs_[leaving]) == 0)
                ++degenerate_run;
            else
                degenerate_run = 0;
            pivot(leaving, entering);
            ++pivots;
        }
        return pivots;
    }

    bool feasible() const { return sgn(objective_) == 0; }

    void extract_primal(RationalVector& y, RationalVector& z) const
    {
        y.assign(num_nonneg_, Rational(0));
        z.assign(num_free_, Rational(0));
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const std::size_t j = basis_[r];
            if (j < num_nonneg_) {
                y[j] = rhs_[r];
            } else if (j < num_struct_) {
                const std::size_t k = (j - num_nonneg_) / 2;
                if ((j - num_nonneg_) % 2 == 0)
                    z[k] += rhs_[r];
                else
                    z[k] -= rhs_[r];
            }
        }
    }

    /// w with a.w >= 0 on sign-constrained columns, e.w = 0 on free ones, c.w < 0.
    RationalVector extract_dual_ray() const
    {
        RationalVector w(dim_);
        for (std::size_t r = 0; r < row_coord_.size(); ++r) {
            // Phase-one dual value of row r is 1 - reduced cost of its artificial.
            Rational pi = 1 - cost_[num_struct_ + r];
            if (sign_[r] > 0)
                pi = -pi;
            w[row_coord_[r]] = std::move(pi);
        }
        return w;
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t choose_entering(bool bland) const
    {
        std::size_t best = npos;
        for (std::size_t j = 0; j < num_cols_; ++j) {
            if (sgn(cost_[j]) >= 0)
                continue;
            if (bland)
                return j;
            if (best == npos || cost_[j] < cost_[best])
                best = j;
        }
        return best;
    }

    // Rows of the basis inverse sit in the artificial columns; comparing them
    // scaled by the pivot column breaks ratio ties without cycling.
    int lex_compare_rows(std::size_t a, std::size_t b, std::size_t q)
    {
        Rational x, y;
        for (std::size_t j = num_struct_; j < num_cols_; ++j) {
            x = rows_[a][j] / rows_[a][q];
            y = rows_[b][j] / rows_[b][q];
            if (const int c = cmp(x, y); c != 0)
                return c;
        }
        return 0;
    }

    std::size_t choose_leaving(std::size_t q, bool lex)
    {
        std::size_t best = npos;
        Rational best_ratio;
        Rational ratio;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& a = rows_[r][q];
            if (sgn(a) <= 0)
                continue;
            ratio = rhs_[r] / a;
            if (best == npos) {
                best = r;
                best_ratio = ratio;
                continue;
            }
            int c = cmp(ratio, best_ratio);
            if (c == 0)
                c = lex ? lex_compare_rows(r, best, q) : (basis_[r] < basis_[best] ? -1 : 1);
            if (c < 0) {
                best = r;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(std::size_t p, std::size_t q)
    {
        auto& prow = rows_[p];
        const Rational inv = 1 / prow[q];
        nonzero_.clear();
        for (std::size_t j = 0; j < num_cols_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nonzero_.push_back(j);
            }
        }
        rhs_[p] *= inv;

        Rational factor;
        Rational tmp;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == p || sgn(rows_[r][q]) == 0)
                continue;
            auto& row = rows_[r];
            factor = row[q];
            for (std::size_t j : nonzero_) {
                mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
                mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp.get_mpq_t());
            }
            mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rhs_[p].get_mpq_t());
            mpq_sub(rhs_[r].get_mpq_t(), rhs_[r].get_mpq_t(), tmp.get_mpq_t());
        }
        if (sgn(cost_[q]) != 0) {
            factor = cost_[q];
            for (std::size_t j : nonzero_) {
                mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[j].get_mpq_t());
                mpq_sub(cost_[j].get_mpq_t(), cost_[j].get_mpq_t(), tmp.get_mpq_t());
            }
            // The objective moves by (reduced cost) * (step length).
            mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rhs_[p].get_mpq_t());
            mpq_add(objective_.get_mpq_t(), objective_.get_mpq_t(), tmp.get_mpq_t());
        }
        basis_[p] = q;
    }

    std::size_t num_nonneg_;
    std::size_t num_free_;
    std::size_t num_struct_ = 0;
    std::size_t num_cols_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_coord_;
    std::vector<RationalVector> rows_;
    RationalVector rhs_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    RationalVector cost_;
    Rational objective_;
    std::vector<std::size_t> nonzero_;
};

RationalVector dense(const LinForm& f) { return RationalVector(f.coeffs().begin(), f.coeffs().end()); }

void check_target(const Cone& cone, const LinForm& target)
{
    if (target.n() != cone.n)
        throw std::invalid_argument("target dimension differs from cone");
    if (target.relation() != Relation::ge)
        throw std::invalid_argument("equality targets must be split into two inequalities");
}

}  // namespace

FarkasResult FarkasSolver::solve(std::span<const RationalVector> nonneg_columns,
                                 std::span<const RationalVector> free_columns,
                                 std::span<const Rational> target)
{
    Tableau tableau(nonneg_columns, free_columns, target);
    FarkasResult result;
    result.pivots = tableau.run(rule_);
    total_pivots_ += result.pivots;
    result.feasible = tableau.feasible();
    if (result.feasible) {
        tableau.extract_primal(result.nonneg_multipliers, result.free_multipliers);
        // Exact re-multiplication guards against any bookkeeping error.
        RationalVector sum(target.size());
        for (std::size_t j = 0; j < nonneg_columns.size(); ++j) {
            const Rational& y = result.nonneg_multipliers[j];
            if (sgn(y) < 0)
                throw std::logic_error("Farkas solver produced a negative multiplier");
            if (sgn(y) == 0)
                continue;
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += y * nonneg_columns[j][i];
        }
        for (std::size_t j = 0; j < free_columns.size(); ++j) {
            const Rational& z = result.free_multipliers[j];
            if (sgn(z) == 0)
                continue;
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] += z * free_columns[j][i];
        }
        for (std::size_t i = 0; i < sum.size(); ++i) {
            if (sum[i] != target[i])
                throw std::logic_error("Farkas solver produced an invalid combination");
        }
    } else {
        result.dual_ray = tableau.extract_dual_ray();
        for (const auto& col : nonneg_columns) {
            if (sgn(dot(col, result.dual_ray)) < 0)
                throw std::logic_error("Farkas solver produced an infeasible dual ray");
        }
        for (const auto& col : free_columns) {
            if (sgn(dot(col, result.dual_ray)) != 0)
                throw std::logic_error("Farkas solver produced an infeasible dual ray");
        }
        if (sgn(dot(target, result.dual_ray)) >= 0)
            throw std::logic_error("Farkas solver produced a non-separating dual ray");
    }
    return result;
}

InferResult infer(const Cone& cone, const LinForm& target, PivotRule rule)
{
    check_target(cone, target);
    std::vector<RationalVector> nonneg;
    nonneg.reserve(cone.ineqs.size());
    for (const auto& f : cone.ineqs)
        nonneg.push_back(dense(f));
    std::vector<RationalVector> free_cols;
    free_cols.reserve(cone.eqs.size());
    for (const auto& g : cone.eqs)
        free_cols.push_back(dense(g));

    FarkasSolver solver(rule);
    FarkasResult farkas = solver.solve(nonneg, free_cols, target.coeffs());

    InferResult out;
    out.implied = farkas.feasible;
    if (farkas.feasible) {
        Certificate cert;
        cert.target = target;
        for (std::size_t i = 0; i < farkas.nonneg_multipliers.size(); ++i) {
            if (sgn(farkas.nonneg_multipliers[i]) != 0)
                cert.ineq_multipliers.emplace(i, farkas.nonneg_multipliers[i]);
        }
        for (std::size_t j = 0; j < farkas.free_multipliers.size(); ++j) {
            if (sgn(farkas.free_multipliers[j]) != 0)
                cert.eq_multipliers.emplace(j, farkas.free_multipliers[j]);
        }
        out.certificate = std::move(cert);
    } else {
        farkas.dual_ray[0] = 0;
        out.witness = EntVector(cone.n, std::move(farkas.dual_ray));
    }
    return out;
}

bool check_certificate(const Cone& cone, const Certificate& cert)
{
    if (cert.target.n() != cone.n)
        return false;
    RationalVector sum(cert.target.size());
    for (const auto& [index, y] : cert.ineq_multipliers) {
        if (index >= cone.ineqs.size())
            throw std::out_of_range("certificate references inequality " + std::to_string(index));
        if (sgn(y) < 0)
            return false;
        auto c = cone.ineqs[index].coeffs();
        for (std::size_t i = 0; i < sum.size(); ++i) {
            if (sgn(c[i]) != 0)
                sum[i] += y * c[i];
        }
    }
    for (const auto& [index, z] : cert.eq_multipliers) {
        if (index >= cone.eqs.size())
            throw std::out_of_range("certificate references equality " + std::to_string(index));
        auto c = cone.eqs[index].coeffs();
        for (std::size_t i = 0; i < sum.size(); ++i) {
            if (sgn(c[i]) != 0)
                sum[i] += z * c[i];
        }
    }
    auto t = cert.target.coeffs();
    for (std::size_t i = 0; i < sum.size(); ++i) {
        if (sum[i] != t[i])
            return false;
    }
    return true;
}

SolveResult solve(const LinForm& objective, const Cone& cone, LpSense sense, PivotRule rule)
{
    if (objective.n() != cone.n)
        throw std::invalid_argument("objective dimension differs from cone");
    LinForm target = sense == LpSense::minimize ? objective : -objective;
    target.set_relation(Relation::ge);
    InferResult inferred = infer(cone, target, rule);
    SolveResult out;
    if (inferred.implied) {
        out.status = LpStatus::bounded_at_zero;
        out.certificate = std::move(inferred.certificate);
    } else {
        out.status = LpStatus::unbounded;
        out.ray = std::move(inferred.witness);
    }
    return out;
}

bool point_in_projection(const ProjectionSystem& system, std::span<const Rational> x1)
{
    const std::size_t m = system.a1.size();
    const std::size_t k = system.e1.size();
    if (system.a2.size() != m || system.b.size() != m || system.e2.size() != k ||
        system.d.size() != k)
        throw std::invalid_argument("point_in_projection: block sizes disagree");
    std::size_t dropped = 0;
    if (m > 0)
        dropped = system.a2.front().size();
    else if (k > 0)
        dropped = system.e2.front().size();
    for (std::size_t i = 0; i < m; ++i) {
        if (system.a1[i].size() != x1.size() || system.a2[i].size() != dropped)
            throw std::invalid_argument("point_in_projection: row length mismatch");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (system.e1[i].size() != x1.size() || system.e2[i].size() != dropped)
            throw std::invalid_argument("point_in_projection: row length mismatch");
    }

    // The LP over (y, w) is homogeneous, so its value is 0 or +infinity: it is
    // bounded iff (A1 x1 - b, E1 x1 - d) is nonnegative on the cone
    // {y >= 0, A2^T y + E2^T w = 0}, a Farkas question in R^{m+k}.
    const std::size_t dim = m + k;
    RationalVector target(dim);
    for (std::size_t i = 0; i < m; ++i)
        target[i] = dot(system.a1[i], x1) - system.b[i];
    for (std::size_t i = 0; i < k; ++i)
        target[m + i] = dot(system.e1[i], x1) - system.d[i];

    std::vector<RationalVector> nonneg(m, RationalVector(dim));
    for (std::size_t i = 0; i < m; ++i)
        nonneg[i][i] = 1;
    std::vector<RationalVector> free_cols(dropped, RationalVector(dim));
    for (std::size_t c = 0; c < dropped; ++c) {
        for (std::size_t i = 0; i < m; ++i)
            free_cols[c][i] = system.a2[i][c];
        for (std::size_t i = 0; i < k; ++i)
            free_cols[c][m + i] = system.e2[i][c];
    }
    FarkasSolver solver;
    return solver.solve(nonneg, free_cols, target).feasible;
}

bool point_in_projection(const Cone& cone, std::span<const SubsetMask> kept, const EntVector& x1)
{
    if (x1.n() != cone.n)
        throw std::invalid_argument("point dimension differs from cone");
    const std::size_t size = std::size_t{1} << cone.n;
    std::vector<bool> is_kept(size, false);
    for (SubsetMask s : kept) {
        if (s.bits() >= size)
            throw std::invalid_argument("kept coordinate outside ground set");
        is_kept[s.bits()] = true;
    }
    std::vector<std::size_t> kept_idx, dropped_idx;
    for (std::size_t i = 1; i < size; ++i)
        (is_kept[i] ? kept_idx : dropped_idx).push_back(i);

    auto split = [&](const LinForm& f, RationalVector& a, RationalVector& b) {
        auto c = f.coeffs();
        a.resize(kept_idx.size());
        b.resize(dropped_idx.size());
        for (std::size_t i = 0; i < kept_idx.size(); ++i)
            a[i] = c[kept_idx[i]];
        for (std::size_t i = 0; i < dropped_idx.size(); ++i)
            b[i] = c[dropped_idx[i]];
    };
    ProjectionSystem system;
    system.a1.resize(cone.ineqs.size());
    system.a2.resize(cone.ineqs.size());
    system.b.assign(cone.ineqs.size(), Rational(0));
    for (std::size_t i = 0; i < cone.ineqs.size(); ++i)
        split(cone.ineqs[i], system.a1[i], system.a2[i]);
    system.e1.resize(cone.eqs.size());
    system.e2.resize(cone.eqs.size());
    system.d.assign(cone.eqs.size(), Rational(0));
    for (std::size_t i = 0; i < cone.eqs.size(); ++i)
        split(cone.eqs[i], system.e1[i], system.e2[i]);

    RationalVector point(kept_idx.size());
    for (std::size_t i = 0; i < kept_idx.size(); ++i)
        point[i] = x1.values()[kept_idx[i]];
    return point_in_projection(system, point);
}

}  // namespace entcone
