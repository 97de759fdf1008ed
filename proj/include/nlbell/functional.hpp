#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nlbell/behavior.hpp"

namespace nlbell {

/// Integer Bell-type functional in Collins-Gisin coordinates.
///
/// The inequality it represents is constant + <coeffs, point> <= 0.
struct BellFunctional {
    Scenario scenario{2};
    std::vector<std::int64_t> alice;
    std::vector<std::int64_t> bob;
    Square<std::int64_t> joint;  // joint(i, j) multiplies P(A_i B_j)
    std::int64_t constant = 0;

    BellFunctional() = default;
    explicit BellFunctional(Scenario s)
        : scenario(s),
          alice(static_cast<std::size_t>(s.settings()), 0),
          bob(static_cast<std::size_t>(s.settings()), 0),
          joint(s.settings(), 0) {}

    [[nodiscard]] int settings() const noexcept { return scenario.settings(); }

    /// (N, constant, alice..., bob..., joint row-major); the ordering key for canonical forms.
    [[nodiscard]] std::vector<std::int64_t> flattened() const;

    /// Build from the printed table layout: rows[j][i] is the coefficient of P(A_i B_j).
    static BellFunctional from_table(std::span<const std::int64_t> alice_marginals,
                                     std::span<const std::int64_t> bob_marginals,
                                     const std::vector<std::vector<std::int64_t>>& rows_by_bob);

    friend bool operator==(const BellFunctional&, const BellFunctional&) = default;
    friend bool operator<(const BellFunctional& lhs, const BellFunctional& rhs) {
        return lhs.flattened() < rhs.flattened();
    }
};

template <typename T>
T evaluate(const BellFunctional& f, const BasicBehavior<T>& s) {
    if (f.scenario != s.scenario) throw StructuralError("functional and behavior have different scenarios");
    check_shape(s);
    const int n = f.settings();
    T value = static_cast<T>(f.constant);
    for (int i = 0; i < n; ++i) {
        if (f.alice[i] != 0) value += static_cast<T>(f.alice[i]) * s.alice[i];
        if (f.bob[i] != 0) value += static_cast<T>(f.bob[i]) * s.bob[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (f.joint(i, j) != 0) value += static_cast<T>(f.joint(i, j)) * s.joint(i, j);
        }
    }
    return value;
}

/// CHSH on settings A_0, A_1 and (for N > 2) B_1, B_2, zero elsewhere.
BellFunctional make_chsh(int n);
BellFunctional make_inn22(int n);
/// I_NN22 with Alice's first marginal coefficient strengthened to -(N-1); N >= 3.
BellFunctional make_mnn22(int n);
BellFunctional make_c1(int n);
BellFunctional make_c2(int n);

}  // namespace nlbell
