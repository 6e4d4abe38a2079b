#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entcone/rational.hpp"

namespace entcone {

/// Incremental double description over Z^dim. Starts from the whole space
/// (every unit vector a line) and intersects with half-spaces a.x >= 0 or
/// hyperplanes a.x = 0 one at a time, maintaining a minimal generating set:
/// a basis of the lineality space plus one primitive vector per extreme ray
/// of the cone modulo lineality.
class DoubleDescription {
public:
    explicit DoubleDescription(std::size_t dim);

    void add_inequality(const IntegerVector& a);
    void add_equality(const IntegerVector& a);

    std::size_t dim() const { return dim_; }
    const std::vector<IntegerVector>& lines() const { return lines_; }
    std::size_t ray_count() const { return rays_.size(); }
    const IntegerVector& ray(std::size_t i) const { return rays_[i].v; }
    std::vector<IntegerVector> rays() const;

    std::size_t inequality_count() const { return constraint_count_; }
    /// Indices of processed inequalities vanishing on ray i.
    std::vector<std::size_t> tight_set(std::size_t i) const;

private:
    struct Ray {
        IntegerVector v;
        std::vector<std::uint64_t> zeros;
    };

    void eliminate_line(const IntegerVector& a, bool keep_as_ray);
    void set_bit(Ray& r, std::size_t bit) const;
    void grow_zero_sets();
    bool adjacent(std::size_t p, std::size_t n, std::vector<std::uint64_t>& common) const;
    std::size_t effective_dim() const;
    void register_equality(const IntegerVector& a);
    void cut(const IntegerVector& a, bool equality);

    std::size_t dim_;
    std::size_t constraint_count_ = 0;
    std::size_t words_ = 0;
    std::vector<IntegerVector> lines_;
    std::vector<Ray> rays_;
    // Echelon basis of processed equalities, for the ambient dimension.
    std::vector<RationalVector> equality_basis_;
    std::vector<std::size_t> equality_pivots_;
};

}  // namespace entcone
