#pragma once

#include <cstdint>
#include <vector>

#include "nlbell/functional.hpp"

namespace nlbell {

/// Relabeling of settings and outputs, optionally exchanging the parties.
///
/// Acting on a behavior, the element first flips the outputs of the marked
/// settings, then moves setting i to alice_perm[i] (bob_perm[j] for Bob),
/// then swaps Alice and Bob if party_swap is set.
struct SymmetryElement {
    std::vector<int> alice_perm;
    std::vector<int> bob_perm;
    std::vector<bool> alice_flips;
    std::vector<bool> bob_flips;
    bool party_swap = false;

    static SymmetryElement identity(int n);
    [[nodiscard]] int settings() const noexcept { return static_cast<int>(alice_perm.size()); }

    friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

/// Element acting as lhs after rhs.
SymmetryElement compose(const SymmetryElement& lhs, const SymmetryElement& rhs);
SymmetryElement inverse(const SymmetryElement& g);

template <typename T>
BasicBehavior<T> transform_point(const BasicBehavior<T>& s, const SymmetryElement& g) {
    check_shape(s);
    const int n = s.settings();
    if (g.settings() != n) throw StructuralError("symmetry element and behavior have different scenarios");

    BasicBehavior<T> flipped = s;
    for (int i = 0; i < n; ++i) {
        if (!g.alice_flips[i]) continue;
        flipped.alice[i] = T(1) - s.alice[i];
        for (int j = 0; j < n; ++j) flipped.joint(i, j) = s.bob[j] - s.joint(i, j);
    }
    for (int j = 0; j < n; ++j) {
        if (!g.bob_flips[j]) continue;
        const T before = flipped.bob[j];
        flipped.bob[j] = T(1) - before;
        for (int i = 0; i < n; ++i) flipped.joint(i, j) = flipped.alice[i] - flipped.joint(i, j);
    }

    BasicBehavior<T> out(s.scenario);
    for (int i = 0; i < n; ++i) out.alice[g.alice_perm[i]] = flipped.alice[i];
    for (int j = 0; j < n; ++j) out.bob[g.bob_perm[j]] = flipped.bob[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.joint(g.alice_perm[i], g.bob_perm[j]) = flipped.joint(i, j);

    if (g.party_swap) {
        std::swap(out.alice, out.bob);
        BasicBehavior<T> swapped = out;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) swapped.joint(i, j) = out.joint(j, i);
        return swapped;
    }
    return out;
}

/// Pullback: evaluate(transform(f, g), s) == evaluate(f, transform_point(s, inverse(g))).
BellFunctional transform(const BellFunctional& f, const SymmetryElement& g);

/// Adjacent setting transpositions per party, a flip of setting 0 per party, and party swap.
std::vector<SymmetryElement> group_generators(Scenario s);

/// 2 (N!)^2 4^N.
std::uint64_t group_order(Scenario s);

/// Every group element; intended for N <= 3.
std::vector<SymmetryElement> all_group_elements(Scenario s);

/// Closure of {f} under the symmetry group, sorted and deduplicated.
std::vector<BellFunctional> orbit(const BellFunctional& f);

/// Lexicographic minimum of the orbit under BellFunctional::flattened().
BellFunctional canonical_form(const BellFunctional& f);

}  // namespace nlbell
