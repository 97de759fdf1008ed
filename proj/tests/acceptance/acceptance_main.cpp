// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "nlbell/machine.hpp"
#include "nlbell/polytope.hpp"
#include "nlbell/quantum.hpp"
#include "nlbell/strategy.hpp"
#include "nlbell/symmetry.hpp"

using namespace nlbell;

namespace {

// Collects failed sub-checks with a short description.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] std::string summary() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        return s;
    }
    std::ostringstream notes;

private:
    std::vector<std::string> failures_;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Checks&)> body;
};

std::string str(const Rational& r) { return r.to_string(); }

void counts_n2(Checks& c) {
    const auto local = enumerate_local(Scenario(2));
    const auto chsh = orbit(make_chsh(2));
    const auto machines = nonlocal_wiring_points(Scenario(2), pr_box(), chsh);
    c.expect(local.size() == 16, "local vertices " + std::to_string(local.size()));
    c.expect(chsh.size() == 8, "CHSH orbit " + std::to_string(chsh.size()));
    c.expect(local.size() + machines.size() == 24, "no-signaling vertices " + std::to_string(local.size() + machines.size()));
    c.notes << "16 local + " << machines.size() << " machine points";
}

void counts_n3(Checks& c) {
    const auto local = enumerate_local(Scenario(3));
    const auto facets = local_facets_n3();
    c.expect(local.size() == 64, "local vertices " + std::to_string(local.size()));
    c.expect(facets.chsh.size() == 72, "CHSH-type orbit " + std::to_string(facets.chsh.size()));
    c.expect(facets.i3322.size() == 576, "I3322-type orbit " + std::to_string(facets.i3322.size()));
    const auto all = facets.all();
    c.expect(all.size() == 648, "facet total " + std::to_string(all.size()));
    std::size_t tight = 0;
    for (const auto& f : all) tight += max_over_points(f, local) == 0;
    c.expect(tight == all.size(), std::to_string(all.size() - tight) + " facets not tight");
    c.notes << "72 + 576 = " << all.size() << " facets, all tight";
}

void census(Checks& c) {
    const auto machine_strategies = enumerate_one_machine(Scenario(3), pr_n(3)).size();
    c.expect(machine_strategies == 262144, "strategy pairs " + std::to_string(machine_strategies));
    const auto facets = local_facets_n3();
    const auto vertices = enumerate_ns_vertices_n3(facets);
    c.expect(vertices.size() == 1344, "non-local points " + std::to_string(vertices.size()));
    const std::array<std::array<std::size_t, 3>, 4> expected{{{192, 6, 18}, {288, 1, 8}, {576, 2, 12}, {288, 4, 24}}};
    try {
        const auto table = violation_census(vertices, facets);
        c.expect(table.size() == 4, "class count " + std::to_string(table.size()));
        for (std::size_t k = 0; k < table.size() && k < 4; ++k) {
            const auto& row = table[k];
            const bool match = row.count == expected[k][0] && row.chsh_violations == expected[k][1] &&
                               row.i3322_violations == expected[k][2];
            c.expect(match, to_string(row.label) + " (" + std::to_string(row.count) + "," +
                                std::to_string(row.chsh_violations) + "," + std::to_string(row.i3322_violations) + ")");
            c.notes << to_string(row.label) << "=(" << row.count << "," << row.chsh_violations << ","
                    << row.i3322_violations << ") ";
        }
    } catch (const std::logic_error& e) {
        c.expect(false, e.what());
    }
}

void machine_values(Checks& c) {
    const auto chsh = evaluate(make_chsh(2), machine_behavior(pr_box()));
    const auto i3322 = evaluate(make_inn22(3), machine_behavior(pr_n(3)));
    c.expect(chsh == Rational(1, 2), "CHSH(PR) = " + str(chsh));
    c.expect(i3322 == 1, "I3322(PR_3) = " + str(i3322));
    for (int n = 2; n <= 6; ++n) {
        const auto v = evaluate(make_inn22(n), machine_behavior(pr_n(n)));
        c.expect(v == Rational(n - 1, 2), "I_NN22(PR_N) at N=" + std::to_string(n) + " = " + str(v));
    }
}

void appendix_wiring(Checks& c) {
    const WiringTable two{{{0, 0}, {0, 1}, {1, 0}}, {{0, 0}, {1, 0}, {0, 1}}};
    c.expect(parity_matrix(two) == BitMatrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}, "two-box parity matrix");
    c.expect(wire_pr_boxes(two) == recipe(make_inn22(3)), "two-box machine differs from recipe(I3322)");
    for (int n = 2; n <= 6; ++n) {
        const auto w = make_prn_wiring(n);
        c.expect(w.boxes() == n - 1, "box count at N=" + std::to_string(n));
        c.expect(wire_pr_boxes(w) == pr_n(n), "wired machine differs from PR_N at N=" + std::to_string(n));
    }
}

void m_inequalities(Checks& c) {
    const auto m3 = verify_facet(make_mnn22(3), StrategyClass::one_machine(pr_box()));
    c.expect(m3.max_value == 0, "M3322 max " + str(m3.max_value));
    c.expect(m3.deterministic_saturating >= 8, "deterministic saturators " + std::to_string(m3.deterministic_saturating));
    c.expect(m3.machine_saturating >= 57, "one-box saturators " + std::to_string(m3.machine_saturating));
    c.expect(m3.affine_rank == 14, "M3322 rank " + std::to_string(m3.affine_rank));
    c.notes << "M3322: " << m3.deterministic_saturating << " det + " << m3.machine_saturating << " box points, rank "
            << m3.affine_rank;
    for (int n = 4; n <= 5; ++n) {
        const auto cert = verify_facet(make_mnn22(n), StrategyClass::one_machine(pr_n(n - 1)));
        const int d = Scenario(n).dimension();
        c.expect(cert.max_value == 0, "M_NN22 max at N=" + std::to_string(n) + " " + str(cert.max_value));
        c.expect(cert.affine_rank == d - 1, "M_NN22 rank at N=" + std::to_string(n) + " " + std::to_string(cert.affine_rank));
        c.notes << "; N=" << n << " rank " << cert.affine_rank;
    }
    for (int n = 3; n <= 6; ++n) {
        const auto points = deterministic_saturators_mnn22(n);
        std::size_t zero = 0;
        for (const auto& p : points) zero += evaluate(make_mnn22(n), p) == 0;
        c.expect(points.size() == (std::size_t{1} << n) && zero == points.size(),
                 "deterministic saturators at N=" + std::to_string(n));
    }
}

void lemma1(Checks& c) {
    for (int n = 3; n <= 4; ++n) {
        const auto r = check_lemma1(n, 10000, 0);
        c.expect(r.samples == 10000, "samples at N=" + std::to_string(n));
        c.expect(r.passed(), std::to_string(r.counterexamples.size()) + " counterexamples at N=" + std::to_string(n));
        c.notes << "N=" << n << ": " << r.samples << " samples, min C1 " << r.min_c1 << ", min C2 " << r.min_c2 << "; ";
    }
}

void exclusivity(Checks& c) {
    const auto c1 = make_c1(3), c2 = make_c2(3);
    std::size_t both = 0, visited = 0;
    for (const auto& s : enumerate_one_machine(Scenario(3), pr_box())) {
        const auto p = strategy_behavior(s);
        ++visited;
        if (evaluate(c1, p) > 0 && evaluate(c2, p) > 0) ++both;
    }
    c.expect(visited == 46656, "strategies visited " + std::to_string(visited));
    c.expect(both == 0, std::to_string(both) + " strategies violate both");
    c.notes << visited << " one-box strategies, " << both << " violate both";
}

void quantum_claims(Checks& c) {
    using namespace quantum;
    const double pi4 = std::numbers::pi / 4;
    const auto chsh = seesaw_maximize(make_chsh(2), TwoQubitState::schmidt(pi4));
    c.expect(std::abs(chsh.value - (1 / std::sqrt(2.0) - 0.5)) < 1e-6, "CHSH see-saw " + std::to_string(chsh.value));

    SeesawOptions fifty;
    fifty.restarts = 50;
    const auto m_max = seesaw_maximize(make_mnn22(3), TwoQubitState::schmidt(pi4), fifty);
    c.expect(m_max.value <= 1e-9, "M3322 at maximal entanglement " + std::to_string(m_max.value));

    SeesawOptions twenty;
    const auto sweep = theta_sweep(make_mnn22(3), 100, twenty);
    const auto& best = sweep.curve[sweep.argmax];
    c.expect(best.value > 0 && best.theta < pi4, "M3322 sweep found no violation");
    c.notes << "CHSH " << chsh.value << "; M3322 max " << best.value << " at theta " << best.theta;

    for (int n = 4; n <= 5; ++n) {
        const auto s = theta_sweep(make_mnn22(n), 100, twenty);
        const double top = s.curve[s.argmax].value;
        c.expect(top <= 1e-7, "M_NN22 violated at N=" + std::to_string(n) + ": " + std::to_string(top));
        c.notes << "; M" << n << n << "22 max " << top;
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "two-setting counts", 1, counts_n2},
        {2, "three-setting counts and facet tightness", 10, counts_n3},
        {3, "non-local vertex census", 60, census},
        {4, "machine values", 1, machine_values},
        {5, "PR-box wirings", 1, appendix_wiring},
        {6, "M inequalities as one-machine facets", 300, m_inequalities},
        {7, "M violation implies C1 and C2 violation", 30, lemma1},
        {8, "C1/C2 exclusivity with one PR-box", 60, exclusivity},
        {9, "quantum see-saw claims", 600, quantum_claims},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        checks.expect(seconds < cr.limit_seconds, "runtime over " + std::to_string(cr.limit_seconds) + " s");
        const bool ok = checks.ok();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << std::fixed
                  << std::setprecision(2) << seconds << " s)";
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(9);
        if (!ok) std::cout << " -- " << checks.summary();
        const auto notes = checks.notes.str();
        if (!notes.empty()) std::cout << " [" << notes << "]";
        std::cout << std::endl;
    }
    std::cout << "INFO criterion 10: completeness of facet lists is out of scope; covered by tightness and rank checks"
              << std::endl;
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
