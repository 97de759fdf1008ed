#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlbell/rational.hpp"

namespace nlbell {

/// Input does not have the shape its scenario requires.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Symmetric bipartite scenario: N binary-outcome settings per party.
class Scenario {
public:
    explicit Scenario(int n_settings);

    [[nodiscard]] int settings() const noexcept { return n_; }
    [[nodiscard]] static constexpr int outcomes() noexcept { return 2; }
    /// Number of Collins-Gisin coordinates, N(N+2).
    [[nodiscard]] int dimension() const noexcept { return n_ * (n_ + 2); }

    friend bool operator==(const Scenario&, const Scenario&) = default;

private:
    int n_;
};

/// Dense N x N table, indexed (alice setting, bob setting).
template <typename T>
class Square {
public:
    Square() = default;
    explicit Square(int n, T fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

    [[nodiscard]] int size() const noexcept { return n_; }
    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    [[nodiscard]] std::span<const T> flat() const noexcept { return data_; }

    friend bool operator==(const Square&, const Square&) = default;

private:
    int n_ = 0;
    std::vector<T> data_;
};

/// A no-signaling behavior in Collins-Gisin coordinates.
///
/// alice[i] = P(r_A = 0 | A_i), bob[j] = P(r_B = 0 | B_j),
/// joint(i, j) = P(r_A = 0, r_B = 0 | A_i, B_j). Positivity is not enforced
/// here; call validate().
template <typename T>
struct BasicBehavior {
    Scenario scenario{2};
    std::vector<T> alice;
    std::vector<T> bob;
    Square<T> joint;

    BasicBehavior() = default;
    explicit BasicBehavior(Scenario s)
        : scenario(s),
          alice(static_cast<std::size_t>(s.settings())),
          bob(static_cast<std::size_t>(s.settings())),
          joint(s.settings()) {}

    [[nodiscard]] int settings() const noexcept { return scenario.settings(); }

    /// Coordinates in canonical order: alice, bob, then joint row-major by alice setting.
    [[nodiscard]] std::vector<T> coordinates() const {
        std::vector<T> out(alice);
        out.insert(out.end(), bob.begin(), bob.end());
        const auto flat = joint.flat();
        out.insert(out.end(), flat.begin(), flat.end());
        return out;
    }
    static BasicBehavior from_coordinates(Scenario s, std::span<const T> coords) {
        if (static_cast<int>(coords.size()) != s.dimension()) {
            throw StructuralError("coordinate vector has wrong length for scenario");
        }
        const int n = s.settings();
        BasicBehavior b(s);
        for (int i = 0; i < n; ++i) b.alice[i] = coords[i];
        for (int j = 0; j < n; ++j) b.bob[j] = coords[n + j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.joint(i, j) = coords[2 * n + i * n + j];
        return b;
    }

    friend bool operator==(const BasicBehavior&, const BasicBehavior&) = default;
};

using BehaviorPoint = BasicBehavior<Rational>;
using FloatBehavior = BasicBehavior<double>;

/// One reconstructed probability P(r_A, r_B | A_i, B_j) that left [0, 1].
struct PositivityViolation {
    int alice_setting;
    int bob_setting;
    int alice_outcome;
    int bob_outcome;

    friend bool operator==(const PositivityViolation&, const PositivityViolation&) = default;
};

using ValidityReport = std::vector<PositivityViolation>;

/// Full table: probs[i][j][2 * r_A + r_B].
template <typename T>
using FullTable = std::vector<std::vector<std::array<T, 4>>>;

/// Raised by reconstruct_full on a point with negative probabilities.
class InvalidBehavior : public std::invalid_argument {
public:
    explicit InvalidBehavior(ValidityReport report);
    [[nodiscard]] const ValidityReport& report() const noexcept { return report_; }

private:
    ValidityReport report_;
};

/// Throws StructuralError if vector or table sizes disagree with the scenario.
template <typename T>
void check_shape(const BasicBehavior<T>& point) {
    const auto n = static_cast<std::size_t>(point.settings());
    if (point.alice.size() != n || point.bob.size() != n || static_cast<std::size_t>(point.joint.size()) != n) {
        throw StructuralError("behavior vectors do not match scenario with N=" + std::to_string(n));
    }
}

template <typename T>
std::array<T, 4> cell_probabilities(const BasicBehavior<T>& p, int i, int j) {
    const T& pa = p.alice[i];
    const T& pb = p.bob[j];
    const T& p00 = p.joint(i, j);
    return {p00, pa - p00, pb - p00, T(1) - pa - pb + p00};
}

/// Lists every reconstructed probability below -slack or above 1 + slack.
template <typename T>
ValidityReport validate(const BasicBehavior<T>& point, T slack = T(0)) {
    check_shape(point);
    ValidityReport report;
    const int n = point.settings();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto cell = cell_probabilities(point, i, j);
            for (int k = 0; k < 4; ++k) {
                if (cell[k] < -slack || cell[k] > T(1) + slack) report.push_back({i, j, k / 2, k % 2});
            }
        }
    }
    return report;
}

template <typename T>
FullTable<T> reconstruct_full(const BasicBehavior<T>& point) {
    if (auto report = validate(point); !report.empty()) throw InvalidBehavior(std::move(report));
    const int n = point.settings();
    FullTable<T> table(n, std::vector<std::array<T, 4>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = cell_probabilities(point, i, j);
    return table;
}

/// Inverse of reconstruct_full. Throws StructuralError if the table signals.
template <typename T>
BasicBehavior<T> compress(const FullTable<T>& table) {
    const int n = static_cast<int>(table.size());
    BasicBehavior<T> out{Scenario(n)};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) throw StructuralError("full table is not N x N");
    }
    for (int i = 0; i < n; ++i) out.alice[i] = table[i][0][0] + table[i][0][1];
    for (int j = 0; j < n; ++j) out.bob[j] = table[0][j][0] + table[0][j][2];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto& c = table[i][j];
            if (c[0] + c[1] != out.alice[i] || c[0] + c[2] != out.bob[j] || c[0] + c[1] + c[2] + c[3] != T(1)) {
                throw StructuralError("full table is signaling or unnormalized");
            }
            out.joint(i, j) = c[0];
        }
    }
    return out;
}

/// Exact affine combination; weights must be non-negative and sum to one.
BehaviorPoint convex_combine(std::span<const BehaviorPoint> points, std::span<const Rational> weights);

/// Deterministic local strategy: each party outputs a fixed bit per setting.
BehaviorPoint deterministic_point(std::span<const int> alice_outputs, std::span<const int> bob_outputs);

/// Uniform marginals, uniform joints (every outcome 1/4).
BehaviorPoint uniform_point(Scenario s);

/// True when every coordinate is 0 or 1.
bool is_deterministic(const BehaviorPoint& point);

}  // namespace nlbell
