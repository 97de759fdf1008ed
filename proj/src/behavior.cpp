#include "nlbell/behavior.hpp"

namespace nlbell {

Scenario::Scenario(int n_settings) : n_(n_settings) {
    if (n_settings < 2) throw std::invalid_argument("scenario needs at least 2 settings, got " + std::to_string(n_settings));
}

InvalidBehavior::InvalidBehavior(ValidityReport report)
    : std::invalid_argument("behavior has " + std::to_string(report.size()) + " probabilities outside [0,1]"),
      report_(std::move(report)) {}

BehaviorPoint convex_combine(std::span<const BehaviorPoint> points, std::span<const Rational> weights) {
    if (points.empty()) throw std::invalid_argument("convex_combine needs at least one point");
    if (points.size() != weights.size()) throw StructuralError("convex_combine: one weight per point required");
    Rational total;
    for (const auto& w : weights) {
        if (w < 0) throw std::invalid_argument("convex_combine: negative weight " + w.to_string());
        total += w;
    }
    if (total != 1) throw std::invalid_argument("convex_combine: weights sum to " + total.to_string() + ", not 1");

    const Scenario s = points.front().scenario;
    const int n = s.settings();
    BehaviorPoint out(s);
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& p = points[k];
        if (p.scenario != s) throw StructuralError("convex_combine: scenario mismatch");
        check_shape(p);
        const Rational& w = weights[k];
        for (int i = 0; i < n; ++i) out.alice[i] += w * p.alice[i];
        for (int j = 0; j < n; ++j) out.bob[j] += w * p.bob[j];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.joint(i, j) += w * p.joint(i, j);
    }
    return out;
}

BehaviorPoint deterministic_point(std::span<const int> alice_outputs, std::span<const int> bob_outputs) {
    if (alice_outputs.size() != bob_outputs.size()) throw StructuralError("deterministic_point: party sizes differ");
    const Scenario s(static_cast<int>(alice_outputs.size()));
    const int n = s.settings();
    BehaviorPoint p(s);
    for (int i = 0; i < n; ++i) p.alice[i] = alice_outputs[i] == 0 ? 1 : 0;
    for (int j = 0; j < n; ++j) p.bob[j] = bob_outputs[j] == 0 ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.joint(i, j) = p.alice[i] * p.bob[j];
    return p;
}

BehaviorPoint uniform_point(Scenario s) {
    BehaviorPoint p(s);
    const int n = s.settings();
    for (int i = 0; i < n; ++i) {
        p.alice[i] = Rational(1, 2);
        p.bob[i] = Rational(1, 2);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.joint(i, j) = Rational(1, 4);
    return p;
}

bool is_deterministic(const BehaviorPoint& point) {
    for (const auto& c : point.coordinates()) {
        if (c != 0 && c != 1) return false;
    }
    return true;
}

}  // namespace nlbell
