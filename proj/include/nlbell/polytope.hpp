#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"
#include "nlbell/machine.hpp"
#include "nlbell/strategy.hpp"

namespace nlbell {

/// Either purely local strategies or strategies with one use of a machine.
struct StrategyClass {
    std::optional<MachineSpec> machine;

    static StrategyClass local() { return {}; }
    static StrategyClass one_machine(MachineSpec m) { return {std::move(m)}; }
    [[nodiscard]] std::string label() const;
};

struct FacetCertificate {
    BellFunctional functional;
    StrategyClass strategy_class;
    Rational max_value{};
    /// Distinct saturating behaviors, deduplicated, at most OptimizerOptions::collect_cap.
    std::vector<BehaviorPoint> saturating_points{};
    std::size_t deterministic_saturating = 0;
    std::size_t machine_saturating = 0;
    bool saturating_truncated = false;
    std::uint64_t saturating_strategies = 0;
    int affine_rank = -1;
    int dimension = 0;
    std::optional<WiringStrategy> witness{};

    /// Tight bound and saturating set of affine dimension d - 1.
    [[nodiscard]] bool accepted() const { return max_value == 0 && affine_rank == dimension - 1; }
};

/// Exact maximum over the class, saturating set, and its affine rank.
FacetCertificate verify_facet(const BellFunctional& f, const StrategyClass& cls, const OptimizerOptions& options = {});

/// true iff the point is valid and satisfies every supplied facet.
/// Complete as a locality test only where the facet list is known to be complete (N <= 3).
bool membership_by_facets(const BehaviorPoint& point, const std::vector<BellFunctional>& facets);

/// Maximum of f over a finite point set.
Rational max_over_points(const BellFunctional& f, const std::vector<BehaviorPoint>& points);

/// The 2^N deterministic points on the M_NN22 = 0 hyperplane, grown from the
/// eight N=3 points by adding one setting per party per step.
std::vector<BehaviorPoint> deterministic_saturators_mnn22(int n);

/// Distinct one-machine wiring behaviors that violate at least one facet, in
/// first-occurrence order of the strategy enumeration.
std::vector<BehaviorPoint> nonlocal_wiring_points(Scenario s, const MachineSpec& machine,
                                                  const std::vector<BellFunctional>& facets,
                                                  EnumerationLimits limits = {});

/// CHSH-type and I_3322-type facets at N = 3: orbit(CHSH) then orbit(I_3322).
struct FacetFamilies {
    std::vector<BellFunctional> chsh;
    std::vector<BellFunctional> i3322;

    [[nodiscard]] std::vector<BellFunctional> all() const;
};
FacetFamilies local_facets_n3();

enum class VertexLabel { S1, S2, S3, S4 };
std::string to_string(VertexLabel label);

/// Class of a non-local one-machine vertex at N = 3.
///
/// S2: both parties have a deterministic setting; S3: exactly one party does.
/// With no deterministic settings the anticorrelation pattern, reduced modulo
/// output relabelings, has GF(2) rank 1 (PR-box, S4) or 2 (PR_3, S1).
VertexLabel classify_n3(const BehaviorPoint& vertex);

struct ClassifiedVertex {
    BehaviorPoint point;
    VertexLabel label;
};

/// The 1344 non-local vertices of the N = 3 no-signaling polytope, from one-PR_3 wirings.
std::vector<ClassifiedVertex> enumerate_ns_vertices_n3();
std::vector<ClassifiedVertex> enumerate_ns_vertices_n3(const FacetFamilies& facets);

struct ClassCensus {
    VertexLabel label;
    std::size_t count = 0;
    std::size_t chsh_violations = 0;
    std::size_t i3322_violations = 0;
    BehaviorPoint representative;
};

/// Number of facets of each family violated per class; throws if a class is not uniform.
std::vector<ClassCensus> violation_census(const std::vector<ClassifiedVertex>& vertices, const FacetFamilies& facets);

/// Minimum GF(2) rank of a bit matrix over all row/column complementations.
int relabeled_gf2_rank(const BitMatrix& pattern);

struct Lemma1Report {
    int settings = 0;
    std::size_t samples = 0;
    std::size_t draws = 0;
    std::vector<BehaviorPoint> counterexamples;
    Rational min_c1;
    Rational min_c2;
    std::uint64_t seed = 0;

    [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

/// Draws valid points with M_NN22 > 0 and checks C_1^N > 0 and C_2^N > 0 on each.
///
/// Points are lambda PR_N + (1 - lambda) L, L a random local vertex, mixed
/// further with a random one-PR_N wiring behavior.
Lemma1Report check_lemma1(int n, std::size_t samples, std::uint64_t seed = 0);

}  // namespace nlbell
