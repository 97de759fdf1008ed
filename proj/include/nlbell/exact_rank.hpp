#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "nlbell/behavior.hpp"
#include "nlbell/rational.hpp"

namespace nlbell {

/// Incremental rank of a set of rational vectors.
///
/// Rows are scaled to primitive (arbitrary precision) integer vectors and eliminated fraction-free;
/// each new row's pivot is its entry of largest magnitude.
class ExactRank {
public:
    explicit ExactRank(int dimension) : dim_(dimension) {}

    /// Adds v to the span; returns true if the rank grew.
    bool add(std::span<const Rational> v);
    bool add_integer(std::span<const std::int64_t> v);

    [[nodiscard]] int rank() const noexcept { return static_cast<int>(rows_.size()); }
    [[nodiscard]] int dimension() const noexcept { return dim_; }

private:
    bool reduce_and_insert(std::vector<mpz_class> v);

    int dim_;
    std::vector<std::vector<mpz_class>> rows_;
    std::vector<int> pivots_;
};

/// Dimension of the affine hull of a point set; rank of the differences to the first point.
class AffineRank {
public:
    explicit AffineRank(Scenario s) : rank_(s.dimension()) {}

    bool add(const BehaviorPoint& p);
    [[nodiscard]] int rank() const noexcept { return rank_.rank(); }
    [[nodiscard]] bool empty() const noexcept { return base_.empty(); }

private:
    ExactRank rank_;
    std::vector<Rational> base_;
};

int affine_rank(std::span<const BehaviorPoint> points);

}  // namespace nlbell
