#include "nlbell/exact_rank.hpp"

#include <stdexcept>

namespace nlbell {

namespace {

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

bool ExactRank::add(std::span<const Rational> v) {
    if (static_cast<int>(v.size()) != dim_) throw StructuralError("rank: vector has wrong dimension");
    mpz_class scale = 1;
    for (const auto& x : v) scale = lcm(scale, mpz_class(static_cast<long>(x.den())));
    std::vector<mpz_class> ints(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        ints[k] = mpz_class(static_cast<long>(v[k].num())) * (scale / mpz_class(static_cast<long>(v[k].den())));
    }
    return reduce_and_insert(std::move(ints));
}

bool ExactRank::add_integer(std::span<const std::int64_t> v) {
    if (static_cast<int>(v.size()) != dim_) throw StructuralError("rank: vector has wrong dimension");
    std::vector<mpz_class> ints(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) ints[k] = static_cast<long>(v[k]);
    return reduce_and_insert(std::move(ints));
}

bool ExactRank::reduce_and_insert(std::vector<mpz_class> v) {
    if (rank() == dim_) return false;
    make_primitive(v);
    mpz_class g, row_scale, v_scale;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int p = pivots_[r];
        if (sgn(v[p]) == 0) continue;
        const auto& row = rows_[r];
        g = gcd(row[p], v[p]);
        row_scale = v[p] / g;
        v_scale = row[p] / g;
        for (int k = 0; k < dim_; ++k) v[k] = v_scale * v[k] - row_scale * row[k];
        make_primitive(v);
    }
    int pivot = -1;
    for (int k = 0; k < dim_; ++k) {
        if (sgn(v[k]) != 0 && (pivot < 0 || mpz_cmpabs(v[k].get_mpz_t(), v[pivot].get_mpz_t()) > 0)) pivot = k;
    }
    if (pivot < 0) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool AffineRank::add(const BehaviorPoint& p) {
    auto coords = p.coordinates();
    if (base_.empty()) {
        base_ = std::move(coords);
        return false;
    }
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= base_[k];
    return rank_.add(coords);
}

int affine_rank(std::span<const BehaviorPoint> points) {
    if (points.empty()) return -1;
    AffineRank acc(points.front().scenario);
    for (const auto& p : points) acc.add(p);
    return acc.rank();
}

}  // namespace nlbell
