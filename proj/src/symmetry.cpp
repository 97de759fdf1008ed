#include "nlbell/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nlbell {

SymmetryElement SymmetryElement::identity(int n) {
    SymmetryElement g;
    g.alice_perm.resize(n);
    g.bob_perm.resize(n);
    std::iota(g.alice_perm.begin(), g.alice_perm.end(), 0);
    std::iota(g.bob_perm.begin(), g.bob_perm.end(), 0);
    g.alice_flips.assign(n, false);
    g.bob_flips.assign(n, false);
    return g;
}

namespace {

SymmetryElement exchange_parties(const SymmetryElement& g) {
    SymmetryElement out = g;
    std::swap(out.alice_perm, out.bob_perm);
    std::swap(out.alice_flips, out.bob_flips);
    return out;
}

void check_same_size(const SymmetryElement& a, const SymmetryElement& b) {
    if (a.settings() != b.settings()) throw StructuralError("symmetry elements act on different scenarios");
}

}  // namespace

// lhs . rhs = Swap^(s1+s2) P1' F1' P2 F2, where primes exchange parties when rhs swaps.
// F1' P2 = P2 F'' with F''[i] = F1'[P2(i)].
SymmetryElement compose(const SymmetryElement& lhs, const SymmetryElement& rhs) {
    check_same_size(lhs, rhs);
    const int n = lhs.settings();
    const SymmetryElement outer = rhs.party_swap ? exchange_parties(lhs) : lhs;
    SymmetryElement out = SymmetryElement::identity(n);
    for (int i = 0; i < n; ++i) {
        out.alice_perm[i] = outer.alice_perm[rhs.alice_perm[i]];
        out.bob_perm[i] = outer.bob_perm[rhs.bob_perm[i]];
        out.alice_flips[i] = rhs.alice_flips[i] != outer.alice_flips[rhs.alice_perm[i]];
        out.bob_flips[i] = rhs.bob_flips[i] != outer.bob_flips[rhs.bob_perm[i]];
    }
    out.party_swap = lhs.party_swap != rhs.party_swap;
    return out;
}

// (Swap P F)^-1 = F P^-1 Swap = Swap F' P'^-1 = Swap P'^-1 F'''.
SymmetryElement inverse(const SymmetryElement& g) {
    const int n = g.settings();
    const SymmetryElement base = g.party_swap ? exchange_parties(g) : g;
    SymmetryElement out = SymmetryElement::identity(n);
    for (int i = 0; i < n; ++i) {
        out.alice_perm[base.alice_perm[i]] = i;
        out.bob_perm[base.bob_perm[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        out.alice_flips[i] = base.alice_flips[out.alice_perm[i]];
        out.bob_flips[i] = base.bob_flips[out.bob_perm[i]];
    }
    out.party_swap = g.party_swap;
    return out;
}

BellFunctional transform(const BellFunctional& f, const SymmetryElement& g) {
    const Scenario s = f.scenario;
    if (g.settings() != s.settings()) throw StructuralError("symmetry element and functional have different scenarios");
    const SymmetryElement g_inv = inverse(g);
    const int d = s.dimension();

    // f o T is affine in the coordinates; read it off at the origin and the unit vectors.
    std::vector<std::int64_t> coords(static_cast<std::size_t>(d), 0);
    auto value_at = [&](const std::vector<std::int64_t>& c) {
        const auto point = BasicBehavior<std::int64_t>::from_coordinates(s, c);
        return evaluate(f, transform_point(point, g_inv));
    };
    const std::int64_t constant = value_at(coords);
    std::vector<std::int64_t> linear(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        coords[k] = 1;
        linear[k] = value_at(coords) - constant;
        coords[k] = 0;
    }
    const auto as_point = BasicBehavior<std::int64_t>::from_coordinates(s, linear);
    BellFunctional out{s};
    out.alice = as_point.alice;
    out.bob = as_point.bob;
    out.joint = as_point.joint;
    out.constant = constant;
    return out;
}

std::vector<SymmetryElement> group_generators(Scenario s) {
    const int n = s.settings();
    std::vector<SymmetryElement> gens;
    for (int k = 0; k + 1 < n; ++k) {
        auto a = SymmetryElement::identity(n);
        std::swap(a.alice_perm[k], a.alice_perm[k + 1]);
        gens.push_back(a);
        auto b = SymmetryElement::identity(n);
        std::swap(b.bob_perm[k], b.bob_perm[k + 1]);
        gens.push_back(b);
    }
    auto fa = SymmetryElement::identity(n);
    fa.alice_flips[0] = true;
    gens.push_back(fa);
    auto fb = SymmetryElement::identity(n);
    fb.bob_flips[0] = true;
    gens.push_back(fb);
    auto sw = SymmetryElement::identity(n);
    sw.party_swap = true;
    gens.push_back(sw);
    return gens;
}

std::uint64_t group_order(Scenario s) {
    std::uint64_t fact = 1;
    for (int k = 2; k <= s.settings(); ++k) fact *= static_cast<std::uint64_t>(k);
    return 2 * fact * fact * (std::uint64_t{1} << (2 * s.settings()));
}

std::vector<SymmetryElement> all_group_elements(Scenario s) {
    const int n = s.settings();
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<SymmetryElement> out;
    out.reserve(group_order(s));
    for (int swap = 0; swap < 2; ++swap) {
        for (const auto& pa : perms) {
            for (const auto& pb : perms) {
                for (std::uint32_t flips = 0; flips < (1u << (2 * n)); ++flips) {
                    SymmetryElement g = SymmetryElement::identity(n);
                    g.alice_perm = pa;
                    g.bob_perm = pb;
                    for (int k = 0; k < n; ++k) {
                        g.alice_flips[k] = ((flips >> k) & 1u) != 0;
                        g.bob_flips[k] = ((flips >> (n + k)) & 1u) != 0;
                    }
                    g.party_swap = swap == 1;
                    out.push_back(std::move(g));
                }
            }
        }
    }
    return out;
}

std::vector<BellFunctional> orbit(const BellFunctional& f) {
    const auto gens = group_generators(f.scenario);
    std::set<BellFunctional> seen{f};
    std::vector<BellFunctional> frontier{f};
    while (!frontier.empty()) {
        std::vector<BellFunctional> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                auto image = transform(h, g);
                if (seen.insert(image).second) next.push_back(std::move(image));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

BellFunctional canonical_form(const BellFunctional& f) { return orbit(f).front(); }

}  // namespace nlbell
