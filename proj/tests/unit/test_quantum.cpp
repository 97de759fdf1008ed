#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "nlbell/machine.hpp"
#include "nlbell/quantum.hpp"
#include "nlbell/strategy.hpp"

using namespace nlbell;
using namespace nlbell::quantum;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 xz(double angle) { return {std::sin(angle), 0.0, std::cos(angle)}; }

Vec3 random_unit(gen::Rng& rng) {
    std::normal_distribution<double> g;
    Vec3 v{g(rng), g(rng), g(rng)};
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (auto& c : v) c /= norm;
    return v;
}

// Born rule on the explicit 4-dimensional state vector.
double born_joint(const TwoQubitState& s, const Vec3& a, const Vec3& b) {
    using C = std::complex<double>;
    auto projector = [](const Vec3& n) {
        std::array<std::array<C, 2>, 2> p{};
        p[0][0] = (1.0 + n[2]) / 2.0;
        p[1][1] = (1.0 - n[2]) / 2.0;
        p[0][1] = C(n[0], -n[1]) / 2.0;
        p[1][0] = C(n[0], n[1]) / 2.0;
        return p;
    };
    const auto pa = projector(a), pb = projector(b);
    const auto& psi = s.amplitudes();
    C total = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) total += std::conj(psi[r]) * pa[r / 2][c / 2] * pb[r % 2][c % 2] * psi[c];
    return total.real();
}

}  // namespace

TEST_CASE("states") {
    const auto s = TwoQubitState::schmidt(kPi / 4);
    CHECK(s.correlations()[2][2] == doctest::Approx(1.0));
    CHECK(s.correlations()[0][0] == doctest::Approx(1.0));
    CHECK(s.correlations()[1][1] == doctest::Approx(-1.0));
    CHECK(s.alice_bloch()[2] == doctest::Approx(0.0));
    CHECK_THROWS(TwoQubitState({1.0, 1.0, 0.0, 0.0}));
}

TEST_CASE("optimal CHSH measurements") {
    const MeasurementSet m{{xz(0), xz(kPi / 2)}, {xz(kPi / 4), xz(-kPi / 4)}};
    const auto p = quantum_behavior(TwoQubitState::schmidt(kPi / 4), m);
    CHECK(evaluate(make_chsh(2), p) == doctest::Approx(1 / std::sqrt(2.0) - 0.5).epsilon(1e-9));
    CHECK(validate(p, 1e-9).empty());
}

TEST_CASE("sigma_z on both sides") {
    for (double theta : {0.0, 0.3, 0.6, kPi / 4}) {
        const MeasurementSet m{{xz(0), xz(1)}, {xz(0), xz(2)}};
        const auto p = quantum_behavior(TwoQubitState::schmidt(theta), m);
        CHECK(p.joint(0, 0) == doctest::Approx(std::cos(theta) * std::cos(theta)));
    }
}

TEST_CASE("unnormalized measurements are rejected") {
    const MeasurementSet m{{{1, 0, 0}, {0, 0, 2}}, {{1, 0, 0}, {0, 0, 1}}};
    CHECK_THROWS(quantum_behavior(TwoQubitState::schmidt(0.2), m));
}

TEST_CASE("property: behaviors agree with the Born rule and are valid") {
    gen::Rng rng(61);
    for (int k = 0; k < 200; ++k) {
        const double theta = std::uniform_real_distribution<double>(0, kPi / 4)(rng);
        const auto s = TwoQubitState::schmidt(theta);
        const int n = gen::uniform(rng, 2, 4);
        MeasurementSet m;
        for (int i = 0; i < n; ++i) {
            m.alice.push_back(random_unit(rng));
            m.bob.push_back(random_unit(rng));
        }
        const auto p = quantum_behavior(s, m);
        CHECK(validate(p, 1e-9).empty());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(p.joint(i, j) == doctest::Approx(born_joint(s, m.alice[i], m.bob[j])));
    }
}

TEST_CASE("product states stay local") {
    gen::Rng rng(67);
    const auto s = TwoQubitState::schmidt(0.0);
    for (int k = 0; k < 200; ++k) {
        MeasurementSet m;
        for (int i = 0; i < 3; ++i) {
            m.alice.push_back(random_unit(rng));
            m.bob.push_back(random_unit(rng));
        }
        const auto p = quantum_behavior(s, m);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(p.joint(i, j) == doctest::Approx(p.alice[i] * p.bob[j]));
        CHECK(evaluate(make_chsh(3), p) <= 1e-9);
        CHECK(evaluate(make_inn22(3), p) <= 1e-9);
    }
}

TEST_CASE("see-saw on CHSH") {
    const auto r = seesaw_maximize(make_chsh(2), TwoQubitState::schmidt(kPi / 4));
    CHECK(std::abs(r.value - (1 / std::sqrt(2.0) - 0.5)) < 1e-6);
    CHECK(r.converged);
    CHECK(r.restarts == 20);
    CHECK(evaluate(make_chsh(2), quantum_behavior(TwoQubitState::schmidt(kPi / 4), r.measurements)) ==
          doctest::Approx(r.value));
}

TEST_CASE("see-saw is monotone") {
    SeesawOptions opts;
    opts.record_trace = true;
    opts.restarts = 5;
    for (const auto& f : {make_chsh(2), make_inn22(3), make_mnn22(3), make_inn22(4)}) {
        const auto r = seesaw_maximize(f, TwoQubitState::schmidt(0.5), opts);
        REQUIRE(r.trace.size() >= 2);
        for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] >= r.trace[k - 1] - 1e-12);
        CHECK(r.trace.back() == doctest::Approx(r.value));
    }
}

TEST_CASE("see-saw is reproducible for a fixed seed") {
    SeesawOptions opts;
    opts.seed = 5;
    const auto a = seesaw_maximize(make_inn22(3), TwoQubitState::schmidt(0.6), opts);
    const auto b = seesaw_maximize(make_inn22(3), TwoQubitState::schmidt(0.6), opts);
    CHECK(a.value == b.value);
    CHECK(a.measurements.alice == b.measurements.alice);
}

TEST_CASE("quantum values stay below the no-signaling maximum") {
    for (const auto& f : {make_chsh(2), make_chsh(3), make_inn22(3), make_mnn22(3), make_inn22(4)}) {
        const auto ns = max_over_one_machine(f, pr_n(f.settings())).value.to_double();
        for (double theta : {0.2, 0.5, kPi / 4}) {
            CHECK(seesaw_maximize(f, TwoQubitState::schmidt(theta)).value <= ns + 1e-9);
        }
    }
}

TEST_CASE("x-z plane reaches the full-sphere optimum") {
    SeesawOptions plane;
    plane.real_plane = true;
    for (const auto& f : {make_chsh(2), make_inn22(3)}) {
        for (double theta : {0.3, 0.6, kPi / 4}) {
            const double full = seesaw_maximize(f, TwoQubitState::schmidt(theta)).value;
            const double restricted = seesaw_maximize(f, TwoQubitState::schmidt(theta), plane).value;
            CHECK(std::abs(full - restricted) < 1e-8);
        }
    }
    const auto r = seesaw_maximize(make_inn22(3), TwoQubitState::schmidt(0.5), plane);
    for (const auto& v : r.measurements.alice) CHECK(v[1] == 0.0);
}

TEST_CASE("theta sweeps") {
    SeesawOptions opts;
    opts.restarts = 10;
    const auto chsh = theta_sweep(make_chsh(2), 21, opts);
    CHECK(chsh.curve.size() == 21);
    CHECK(chsh.curve.front().theta == 0.0);
    CHECK(chsh.curve.back().theta == doctest::Approx(kPi / 4));
    CHECK(chsh.argmax == 20);
    CHECK(chsh.curve.front().value <= 1e-9);

    const auto m3322 = theta_sweep(make_mnn22(3), 41, opts);
    CHECK(m3322.curve[m3322.argmax].value > 0);
    CHECK(m3322.curve[m3322.argmax].theta < kPi / 4);
    CHECK(m3322.curve.back().value <= 1e-9);
    CHECK_THROWS(theta_sweep(make_chsh(2), 1, opts));
}
