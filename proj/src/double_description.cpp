#include "entcone/double_description.hpp"

#include <bit>
#include <stdexcept>

namespace entcone {

DoubleDescription::DoubleDescription(std::size_t dim) : dim_(dim)
{
    lines_.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        IntegerVector e(dim);
        e[i] = 1;
        lines_.push_back(std::move(e));
    }
}

std::vector<IntegerVector> DoubleDescription::rays() const
{
    std::vector<IntegerVector> out;
    out.reserve(rays_.size());
    for (const auto& r : rays_)
        out.push_back(r.v);
    return out;
}

std::vector<std::size_t> DoubleDescription::tight_set(std::size_t i) const
{
    std::vector<std::size_t> out;
    const auto& z = rays_.at(i).zeros;
    for (std::size_t w = 0; w < z.size(); ++w) {
        std::uint64_t bits = z[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

void DoubleDescription::set_bit(Ray& r, std::size_t bit) const
{
    r.zeros[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

void DoubleDescription::grow_zero_sets()
{
    const std::size_t needed = (constraint_count_ + 64) / 64;
    if (needed > words_) {
        words_ = needed;
        for (auto& r : rays_)
            r.zeros.resize(words_, 0);
    }
}

std::size_t DoubleDescription::effective_dim() const
{
    return dim_ - equality_basis_.size() - lines_.size();
}

void DoubleDescription::register_equality(const IntegerVector& a)
{
    RationalVector row = to_rational(a);
    for (std::size_t k = 0; k < equality_basis_.size(); ++k) {
        const std::size_t p = equality_pivots_[k];
        if (sgn(row[p]) == 0)
            continue;
        const Rational f = row[p];
        for (std::size_t i = 0; i < dim_; ++i) {
            if (sgn(equality_basis_[k][i]) != 0)
                row[i] -= f * equality_basis_[k][i];
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(row[i]) != 0) {
            const Rational inv = 1 / row[i];
            for (auto& x : row)
                x *= inv;
            // Keep the basis reduced in the new pivot column.
            for (auto& b : equality_basis_) {
                if (sgn(b[i]) == 0)
                    continue;
                const Rational f = b[i];
                for (std::size_t j = 0; j < dim_; ++j) {
                    if (sgn(row[j]) != 0)
                        b[j] -= f * row[j];
                }
            }
            equality_basis_.push_back(std::move(row));
            equality_pivots_.push_back(i);
            return;
        }
    }
}

void DoubleDescription::eliminate_line(const IntegerVector& a, bool keep_as_ray)
{
    // First line not orthogonal to a becomes the pivot.
    std::size_t pivot = lines_.size();
    Integer pivot_value;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        pivot_value = dot(a, lines_[i]);
        if (sgn(pivot_value) != 0) {
            pivot = i;
            break;
        }
    }
    IntegerVector l = std::move(lines_[pivot]);
    lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(pivot));
    if (sgn(pivot_value) < 0) {
        for (auto& x : l)
            x = -x;
        pivot_value = -pivot_value;
    }
    // Project every other generator onto the hyperplane a.x = 0 along l.
    auto reduce = [&](IntegerVector& v) {
        const Integer av = dot(a, v);
        if (sgn(av) == 0)
            return;
        for (std::size_t i = 0; i < dim_; ++i)
            v[i] = pivot_value * v[i] - av * l[i];
        make_primitive(v);
    };
    for (auto& other : lines_)
        reduce(other);
    for (auto& r : rays_)
        reduce(r.v);

    const std::size_t bit = constraint_count_;
    if (!keep_as_ray) {
        for (auto& r : rays_)
            set_bit(r, bit);
        return;
    }
    for (auto& r : rays_)
        set_bit(r, bit);
    // l is tight on every earlier inequality (they vanish on the lineality space).
    Ray nr{std::move(l), std::vector<std::uint64_t>(words_, ~std::uint64_t{0})};
    const std::size_t last = constraint_count_;
    // Clear bits past the last processed inequality, then the new one.
    for (std::size_t b = last; b < words_ * 64; ++b)
        nr.zeros[b / 64] &= ~(std::uint64_t{1} << (b % 64));
    make_primitive(nr.v);
    rays_.push_back(std::move(nr));
}

bool DoubleDescription::adjacent(std::size_t p, std::size_t n,
                                 std::vector<std::uint64_t>& common) const
{
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        common[w] = rays_[p].zeros[w] & rays_[n].zeros[w];
        count += static_cast<std::size_t>(std::popcount(common[w]));
    }
    const std::size_t d = effective_dim();
    if (d >= 2 && count + 2 < d)
        return false;
    for (std::size_t r = 0; r < rays_.size(); ++r) {
        if (r == p || r == n)
            continue;
        bool superset = true;
        for (std::size_t w = 0; w < words_ && superset; ++w)
            superset = (rays_[r].zeros[w] & common[w]) == common[w];
        if (superset)
            return false;
    }
    return true;
}

void DoubleDescription::cut(const IntegerVector& a, bool equality)
{
    std::vector<Integer> values(rays_.size());
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        values[i] = dot(a, rays_[i].v);
        const int s = sgn(values[i]);
        (s > 0 ? pos : s < 0 ? neg : zero).push_back(i);
    }
    const std::size_t bit = constraint_count_;
    std::vector<Ray> next;
    next.reserve(zero.size() + pos.size());
    if (!equality) {
        for (std::size_t i : pos)
            next.push_back(rays_[i]);
    }
    for (std::size_t i : zero) {
        Ray r = rays_[i];
        set_bit(r, bit);
        next.push_back(std::move(r));
    }
    std::vector<std::uint64_t> common(words_);
    for (std::size_t p : pos) {
        for (std::size_t n : neg) {
            if (!adjacent(p, n, common))
                continue;
            Ray r;
            r.v.resize(dim_);
            const Integer& ap = values[p];
            const Integer an = -values[n];
            for (std::size_t i = 0; i < dim_; ++i)
                r.v[i] = ap * rays_[n].v[i] + an * rays_[p].v[i];
            make_primitive(r.v);
            r.zeros = common;
            set_bit(r, bit);
            next.push_back(std::move(r));
        }
    }
    rays_ = std::move(next);
}

void DoubleDescription::add_inequality(const IntegerVector& a)
{
    if (a.size() != dim_)
        throw std::invalid_argument("double description: constraint length mismatch");
    grow_zero_sets();
    bool hits_line = false;
    for (const auto& l : lines_) {
        if (sgn(dot(a, l)) != 0) {
            hits_line = true;
            break;
        }
    }
    if (hits_line)
        eliminate_line(a, true);
    else
        cut(a, false);
    ++constraint_count_;
}

void DoubleDescription::add_equality(const IntegerVector& a)
{
    if (a.size() != dim_)
        throw std::invalid_argument("double description: constraint length mismatch");
    grow_zero_sets();
    register_equality(a);
    bool hits_line = false;
    for (const auto& l : lines_) {
        if (sgn(dot(a, l)) != 0) {
            hits_line = true;
            break;
        }
    }
    if (hits_line)
        eliminate_line(a, false);
    else
        cut(a, true);
    // Equalities occupy a bit so that indices stay aligned with the caller's
    // constraint count; every surviving generator is tight on them.
    ++constraint_count_;
}

}  // namespace entcone
