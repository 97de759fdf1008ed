#include "nlbell/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "nlbell/exact_rank.hpp"
#include "nlbell/symmetry.hpp"

namespace nlbell {

std::string StrategyClass::label() const {
    if (!machine) return "local";
    return "one_machine(" + std::to_string(machine->inputs()) + " inputs)";
}

namespace {

using HalfKey = std::vector<std::int8_t>;

/// 2 * value on a point given in doubled coordinates.
std::int64_t evaluate_doubled(const std::vector<std::int64_t>& flat_f, const HalfKey& x) {
    // flat_f = (N, constant, coefficients...)
    std::int64_t v = 2 * flat_f[1];
    for (std::size_t k = 0; k < x.size(); ++k) v += flat_f[k + 2] * x[k];
    return v;
}

bool has_nonzero_coefficient(const BellFunctional& f) {
    const auto flat = f.flattened();
    return std::any_of(flat.begin() + 2, flat.end(), [](std::int64_t c) { return c != 0; });
}

/// Adds p to the rank accumulator once per distinct point.
struct SaturatingCollector {
    explicit SaturatingCollector(Scenario s, int max_rank) : rank(s), max_rank(max_rank) {}

    void add_for_rank(const HalfKey& key, const BehaviorPoint& p) {
        if (rank.rank() >= max_rank && !rank.empty()) return;
        if (ranked.insert(key).second) rank.add(p);
    }

    AffineRank rank;
    int max_rank;
    std::set<HalfKey> ranked;
};

FacetCertificate verify_local(const BellFunctional& f, const OptimizerOptions& options) {
    FacetCertificate cert{.functional = f, .strategy_class = StrategyClass::local()};
    const auto vertices = enumerate_local(f.scenario, options.limits);
    cert.dimension = f.scenario.dimension();
    cert.max_value = max_over_points(f, vertices);
    AffineRank rank(f.scenario);
    for (const auto& v : vertices) {
        if (evaluate(f, v) != cert.max_value) continue;
        ++cert.saturating_strategies;
        rank.add(v);
        if (cert.saturating_points.size() < options.collect_cap) {
            cert.saturating_points.push_back(v);
            ++cert.deterministic_saturating;
        } else {
            cert.saturating_truncated = true;
        }
    }
    cert.affine_rank = rank.rank();
    return cert;
}

FacetCertificate verify_one_machine(const BellFunctional& f, const MachineSpec& machine,
                                    const OptimizerOptions& options) {
    FacetCertificate cert{.functional = f, .strategy_class = StrategyClass::one_machine(machine)};
    cert.dimension = f.scenario.dimension();
    const auto best = max_over_one_machine(f, machine, options);
    cert.max_value = best.value;
    cert.saturating_strategies = best.saturating_count;
    cert.saturating_truncated = best.saturating_truncated;
    if (best.value > 0) cert.witness = best.witness;

    const StrategyBehaviorBuilder build(machine);
    std::set<HalfKey> seen;
    for (const auto& s : best.saturating) {
        auto key = build.doubled(s.alice, s.bob);
        if (!seen.insert(key).second) continue;
        auto p = build(s.alice, s.bob);
        if (is_deterministic(p)) {
            ++cert.deterministic_saturating;
        } else {
            ++cert.machine_saturating;
        }
        cert.saturating_points.push_back(std::move(p));
    }

    // Each group's saturating set is a product over Bob settings, and Bob
    // setting j only touches bob[j] and joint column j. Its affine hull is
    // spanned by the group's first strategy and the single-setting variations.
    const int max_rank = has_nonzero_coefficient(f) ? cert.dimension - 1 : cert.dimension;
    SaturatingCollector collector(f.scenario, max_rank);
    for (const auto& g : best.groups) {
        PartyChoice bob;
        for (const auto& opts : g.bob_options) bob.push_back(opts.front());
        collector.add_for_rank(build.doubled(g.alice, bob), build(g.alice, bob));
        for (std::size_t j = 0; j < g.bob_options.size(); ++j) {
            for (std::size_t k = 1; k < g.bob_options[j].size(); ++k) {
                PartyChoice varied = bob;
                varied[j] = g.bob_options[j][k];
                collector.add_for_rank(build.doubled(g.alice, varied), build(g.alice, varied));
            }
        }
        if (collector.rank.rank() >= max_rank) break;
    }
    cert.affine_rank = collector.rank.rank();
    return cert;
}

}  // namespace

FacetCertificate verify_facet(const BellFunctional& f, const StrategyClass& cls, const OptimizerOptions& options) {
    if (!cls.machine) return verify_local(f, options);
    return verify_one_machine(f, *cls.machine, options);
}

bool membership_by_facets(const BehaviorPoint& point, const std::vector<BellFunctional>& facets) {
    if (!validate(point).empty()) return false;
    return std::all_of(facets.begin(), facets.end(), [&](const BellFunctional& f) { return evaluate(f, point) <= 0; });
}

Rational max_over_points(const BellFunctional& f, const std::vector<BehaviorPoint>& points) {
    if (points.empty()) throw std::invalid_argument("max_over_points: empty point set");
    Rational best = evaluate(f, points.front());
    for (const auto& p : points) best = std::max(best, evaluate(f, p));
    return best;
}

std::vector<BehaviorPoint> deterministic_saturators_mnn22(int n) {
    if (n < 3) throw std::invalid_argument("M_NN22 saturators need N >= 3");
    // (Alice marginals, Bob marginals) of the eight N = 3 points; marginals fix a deterministic point.
    using Marginals = std::pair<std::vector<int>, std::vector<int>>;
    std::vector<Marginals> current = {
        {{0, 1, 1}, {1, 0, 0}}, {{0, 1, 1}, {0, 0, 0}}, {{0, 1, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 0}},
        {{0, 0, 1}, {0, 0, 1}}, {{0, 0, 1}, {0, 0, 0}}, {{0, 0, 0}, {0, 0, 1}}, {{0, 0, 0}, {0, 0, 0}},
    };
    for (int k = 3; k < n; ++k) {
        std::vector<Marginals> next;
        next.reserve(2 * current.size());
        for (const auto& [a, b] : current) {
            // New Alice setting outputs 1 and a new Bob setting (outputting 1) is prepended.
            Marginals prime{a, b};
            prime.first.push_back(0);
            prime.second.insert(prime.second.begin(), 0);
            next.push_back(std::move(prime));
            // New Alice setting outputs 0. The new Bob setting (outputting 1) goes
            // last only when Alice's settings 1..N-1 all have marginal 1; otherwise
            // it is prepended as above.
            Marginals second{a, b};
            const bool all_ones = std::all_of(a.begin() + 1, a.end(), [](int m) { return m == 1; });
            second.first.push_back(1);
            if (all_ones) {
                second.second.push_back(0);
            } else {
                second.second.insert(second.second.begin(), 0);
            }
            next.push_back(std::move(second));
        }
        current = std::move(next);
    }
    std::vector<BehaviorPoint> out;
    out.reserve(current.size());
    for (const auto& [a, b] : current) {
        std::vector<int> alice_out(a.size()), bob_out(b.size());
        for (std::size_t k = 0; k < a.size(); ++k) alice_out[k] = a[k] == 1 ? 0 : 1;
        for (std::size_t k = 0; k < b.size(); ++k) bob_out[k] = b[k] == 1 ? 0 : 1;
        out.push_back(deterministic_point(alice_out, bob_out));
    }
    return out;
}

std::vector<BehaviorPoint> nonlocal_wiring_points(Scenario s, const MachineSpec& machine,
                                                  const std::vector<BellFunctional>& facets,
                                                  EnumerationLimits limits) {
    const StrategyBehaviorBuilder build(machine);
    std::vector<std::vector<std::int64_t>> flat;
    flat.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.scenario != s) throw StructuralError("facet list does not match the scenario");
        flat.push_back(f.flattened());
    }

    std::set<HalfKey> seen;
    std::vector<BehaviorPoint> out;
    for (const auto& strategy : enumerate_one_machine(s, machine, limits)) {
        auto key = build.doubled(strategy.alice, strategy.bob);
        if (!seen.insert(key).second) continue;
        const bool violates = std::any_of(flat.begin(), flat.end(),
                                          [&](const auto& f) { return evaluate_doubled(f, key) > 0; });
        if (violates) out.push_back(build(strategy.alice, strategy.bob));
    }
    return out;
}

std::vector<BellFunctional> FacetFamilies::all() const {
    std::vector<BellFunctional> out(chsh);
    out.insert(out.end(), i3322.begin(), i3322.end());
    return out;
}

FacetFamilies local_facets_n3() { return {orbit(make_chsh(3)), orbit(make_inn22(3))}; }

std::string to_string(VertexLabel label) {
    switch (label) {
        case VertexLabel::S1: return "S1";
        case VertexLabel::S2: return "S2";
        case VertexLabel::S3: return "S3";
        case VertexLabel::S4: return "S4";
    }
    return "?";
}

int relabeled_gf2_rank(const BitMatrix& pattern) {
    const auto rows = pattern.size();
    const auto cols = rows == 0 ? 0 : pattern.front().size();
    int best = static_cast<int>(std::min(rows, cols));
    for (std::uint32_t fr = 0; fr < (1u << rows); ++fr) {
        for (std::uint32_t fc = 0; fc < (1u << cols); ++fc) {
            BitMatrix m = pattern;
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= static_cast<int>(((fr >> r) & 1u) ^ ((fc >> c) & 1u));
            best = std::min(best, gf2_rank(std::move(m)));
        }
    }
    return best;
}

VertexLabel classify_n3(const BehaviorPoint& vertex) {
    const int n = vertex.settings();
    auto deterministic = [](const Rational& m) { return m == 0 || m == 1; };
    const auto alice_det = std::count_if(vertex.alice.begin(), vertex.alice.end(), deterministic);
    const auto bob_det = std::count_if(vertex.bob.begin(), vertex.bob.end(), deterministic);
    if (alice_det > 0 && bob_det > 0) return VertexLabel::S2;
    if (alice_det > 0 || bob_det > 0) return VertexLabel::S3;

    BitMatrix pattern(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pattern[i][j] = vertex.joint(i, j) == 0 ? 1 : 0;
    switch (relabeled_gf2_rank(pattern)) {
        case 1: return VertexLabel::S4;
        case 2: return VertexLabel::S1;
        default: throw std::invalid_argument("point is not a non-local vertex of a known class");
    }
}

std::vector<ClassifiedVertex> enumerate_ns_vertices_n3() { return enumerate_ns_vertices_n3(local_facets_n3()); }

std::vector<ClassifiedVertex> enumerate_ns_vertices_n3(const FacetFamilies& facets) {
    if (facets.chsh.empty() || facets.i3322.empty()) throw std::invalid_argument("facet orbits are unavailable");
    const auto points = nonlocal_wiring_points(Scenario(3), pr_n(3), facets.all());
    std::vector<ClassifiedVertex> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back({p, classify_n3(p)});
    return out;
}

std::vector<ClassCensus> violation_census(const std::vector<ClassifiedVertex>& vertices, const FacetFamilies& facets) {
    auto count_violated = [](const std::vector<BellFunctional>& family, const BehaviorPoint& p) {
        return static_cast<std::size_t>(
            std::count_if(family.begin(), family.end(), [&](const BellFunctional& f) { return evaluate(f, p) > 0; }));
    };
    std::map<VertexLabel, ClassCensus> by_class;
    for (const auto& v : vertices) {
        const auto chsh = count_violated(facets.chsh, v.point);
        const auto i3322 = count_violated(facets.i3322, v.point);
        auto [it, inserted] = by_class.try_emplace(v.label, ClassCensus{v.label, 0, chsh, i3322, v.point});
        auto& entry = it->second;
        if (entry.chsh_violations != chsh || entry.i3322_violations != i3322) {
            throw std::logic_error("class " + to_string(v.label) + " is not uniform: " + std::to_string(chsh) + "/" +
                                   std::to_string(i3322) + " vs " + std::to_string(entry.chsh_violations) + "/" +
                                   std::to_string(entry.i3322_violations));
        }
        ++entry.count;
    }
    std::vector<ClassCensus> out;
    for (auto& [label, entry] : by_class) out.push_back(std::move(entry));
    return out;
}

Lemma1Report check_lemma1(int n, std::size_t samples, std::uint64_t seed) {
    const auto m = make_mnn22(n);
    const auto c1 = make_c1(n);
    const auto c2 = make_c2(n);
    const auto machine = pr_n(n);
    const auto prn = machine_behavior(machine);
    const StrategyBehaviorBuilder build(machine);

    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    Lemma1Report report;
    report.settings = n;
    report.seed = seed;
    bool first = true;
    while (report.samples < samples) {
        ++report.draws;
        std::vector<int> a(n), b(n);
        for (auto& x : a) x = uniform(0, 1);
        for (auto& x : b) x = uniform(0, 1);
        const auto local = deterministic_point(a, b);
        PartyChoice alice(n, SettingChoice::deterministic(0)), bob(n, SettingChoice::deterministic(0));
        for (auto& c : alice) c = SettingChoice::from_code(uniform(0, build.alphabet() - 1));
        for (auto& c : bob) c = SettingChoice::from_code(uniform(0, build.alphabet() - 1));
        const auto wiring = build(alice, bob);

        const Rational lambda(uniform(1, 64), 64);
        const Rational mu(uniform(0, 16), 64);
        const std::vector<BehaviorPoint> parts{prn, local, wiring};
        const std::vector<Rational> weights{(1 - mu) * lambda, (1 - mu) * (1 - lambda), mu};
        const auto p = convex_combine(parts, weights);
        if (evaluate(m, p) <= 0) continue;

        ++report.samples;
        const auto v1 = evaluate(c1, p);
        const auto v2 = evaluate(c2, p);
        if (first) {
            report.min_c1 = v1;
            report.min_c2 = v2;
            first = false;
        }
        report.min_c1 = std::min(report.min_c1, v1);
        report.min_c2 = std::min(report.min_c2, v2);
        if (v1 <= 0 || v2 <= 0 || !validate(p).empty()) report.counterexamples.push_back(p);
    }
    return report;
}

}  // namespace nlbell
