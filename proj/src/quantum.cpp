#include "nlbell/quantum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nlbell::quantum {

namespace {

using cd = std::complex<double>;
using Pauli = std::array<std::array<cd, 2>, 2>;

constexpr double kNormTolerance = 1e-12;

const std::array<Pauli, 3>& paulis() {
    static const std::array<Pauli, 3> p = {{
        {{{cd(0, 0), cd(1, 0)}, {cd(1, 0), cd(0, 0)}}},
        {{{cd(0, 0), cd(0, -1)}, {cd(0, 1), cd(0, 0)}}},
        {{{cd(1, 0), cd(0, 0)}, {cd(0, 0), cd(-1, 0)}}},
    }};
    return p;
}

const Pauli& identity2() {
    static const Pauli id = {{{cd(1, 0), cd(0, 0)}, {cd(0, 0), cd(1, 0)}}};
    return id;
}

/// <psi| A (x) B |psi>.
double expectation(const std::array<cd, 4>& psi, const Pauli& a, const Pauli& b) {
    cd total = 0;
    for (int r1 = 0; r1 < 2; ++r1)
        for (int r2 = 0; r2 < 2; ++r2)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int c2 = 0; c2 < 2; ++c2) total += std::conj(psi[2 * r1 + r2]) * a[r1][c1] * b[r2][c2] * psi[2 * c1 + c2];
    return total.real();
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Vec3 mat_t_vec(const Mat3& m, const Vec3& v) {
    Vec3 out{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) out[l] += m[k][l] * v[k];
    return out;
}

void check_unit(const std::vector<Vec3>& vs) {
    for (const auto& v : vs) {
        if (std::abs(norm(v) - 1.0) > kNormTolerance) throw std::invalid_argument("measurement Bloch vector is not unit length");
    }
}

/// Objective restricted to one party: const + sum_i <g_i, n_i> / 4 with n_i free unit vectors.
struct PartyLinearForm {
    double offset = 0.0;
    std::vector<Vec3> gradient;
};

/// f as a function of Alice's vectors with Bob's fixed (or vice versa when swapped).
PartyLinearForm alice_form(const BellFunctional& f, const TwoQubitState& st, const std::vector<Vec3>& bob) {
    const int n = f.settings();
    const Vec3 a = st.alice_bloch();
    const Vec3 b = st.bob_bloch();
    const Mat3& t = st.correlations();
    PartyLinearForm form;
    form.offset = static_cast<double>(f.constant);
    form.gradient.assign(n, Vec3{});
    for (int j = 0; j < n; ++j) form.offset += f.bob[j] * (1.0 + dot(bob[j], b)) / 2.0;
    for (int i = 0; i < n; ++i) {
        form.offset += f.alice[i] / 2.0;
        for (int k = 0; k < 3; ++k) form.gradient[i][k] += 2.0 * f.alice[i] * a[k];
        for (int j = 0; j < n; ++j) {
            const double c = static_cast<double>(f.joint(i, j));
            if (c == 0.0) continue;
            form.offset += c * (1.0 + dot(bob[j], b)) / 4.0;
            const Vec3 tb = mat_vec(t, bob[j]);
            for (int k = 0; k < 3; ++k) form.gradient[i][k] += c * (a[k] + tb[k]);
        }
    }
    return form;
}

PartyLinearForm bob_form(const BellFunctional& f, const TwoQubitState& st, const std::vector<Vec3>& alice) {
    const int n = f.settings();
    const Vec3 a = st.alice_bloch();
    const Vec3 b = st.bob_bloch();
    const Mat3& t = st.correlations();
    PartyLinearForm form;
    form.offset = static_cast<double>(f.constant);
    form.gradient.assign(n, Vec3{});
    for (int i = 0; i < n; ++i) form.offset += f.alice[i] * (1.0 + dot(alice[i], a)) / 2.0;
    for (int j = 0; j < n; ++j) {
        form.offset += f.bob[j] / 2.0;
        for (int k = 0; k < 3; ++k) form.gradient[j][k] += 2.0 * f.bob[j] * b[k];
        for (int i = 0; i < n; ++i) {
            const double c = static_cast<double>(f.joint(i, j));
            if (c == 0.0) continue;
            form.offset += c * (1.0 + dot(alice[i], a)) / 4.0;
            const Vec3 ta = mat_t_vec(t, alice[i]);
            for (int k = 0; k < 3; ++k) form.gradient[j][k] += c * (b[k] + ta[k]);
        }
    }
    return form;
}

/// Each term <g, n>/4 is maximized by n = g/|g|: the top eigenvector of the
/// 2x2 operator (|g| + g.sigma)/... acting on that setting.
double optimize_party(const PartyLinearForm& form, std::vector<Vec3>& vectors, bool real_plane) {
    double value = form.offset;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        Vec3 g = form.gradient[i];
        if (real_plane) g[1] = 0.0;
        const double len = norm(g);
        if (len > 0.0) {
            for (int k = 0; k < 3; ++k) vectors[i][k] = g[k] / len;
        }
        value += dot(form.gradient[i], vectors[i]) / 4.0;
    }
    return value;
}

double objective(const BellFunctional& f, const TwoQubitState& st, const MeasurementSet& m) {
    return evaluate(f, quantum_behavior(st, m));
}

Vec3 random_unit(std::mt19937_64& rng, bool real_plane) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Vec3 v{gauss(rng), real_plane ? 0.0 : gauss(rng), gauss(rng)};
        const double len = norm(v);
        if (len > 1e-6) return {v[0] / len, v[1] / len, v[2] / len};
    }
}

}  // namespace

TwoQubitState::TwoQubitState(std::array<std::complex<double>, 4> amplitudes) : psi_(amplitudes) {
    double n2 = 0.0;
    for (const auto& c : psi_) n2 += std::norm(c);
    if (std::abs(std::sqrt(n2) - 1.0) > kNormTolerance) throw std::invalid_argument("two-qubit state is not normalized");
    const auto& s = paulis();
    for (int k = 0; k < 3; ++k) {
        alice_[k] = expectation(psi_, s[k], identity2());
        bob_[k] = expectation(psi_, identity2(), s[k]);
        for (int l = 0; l < 3; ++l) corr_[k][l] = expectation(psi_, s[k], s[l]);
    }
}

TwoQubitState TwoQubitState::schmidt(double theta) {
    if (theta < -1e-15 || theta > std::numbers::pi / 4 + 1e-15) {
        throw std::invalid_argument("Schmidt angle must lie in [0, pi/4]");
    }
    return TwoQubitState({std::cos(theta), 0.0, 0.0, std::sin(theta)});
}

FloatBehavior quantum_behavior(const TwoQubitState& state, const MeasurementSet& measurements) {
    const int n = static_cast<int>(measurements.alice.size());
    if (static_cast<int>(measurements.bob.size()) != n) throw StructuralError("measurement sets differ in size");
    check_unit(measurements.alice);
    check_unit(measurements.bob);
    const Vec3 a = state.alice_bloch();
    const Vec3 b = state.bob_bloch();
    const Mat3& t = state.correlations();

    FloatBehavior p{Scenario(n)};
    for (int i = 0; i < n; ++i) p.alice[i] = (1.0 + dot(measurements.alice[i], a)) / 2.0;
    for (int j = 0; j < n; ++j) p.bob[j] = (1.0 + dot(measurements.bob[j], b)) / 2.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto& na = measurements.alice[i];
            const auto& nb = measurements.bob[j];
            p.joint(i, j) = (1.0 + dot(na, a) + dot(nb, b) + dot(na, mat_vec(t, nb))) / 4.0;
        }
    }
    return p;
}

SeesawResult seesaw_maximize(const BellFunctional& f, const TwoQubitState& state, const SeesawOptions& options) {
    const int n = f.settings();
    std::mt19937_64 rng(options.seed);
    SeesawResult best;
    best.value = -std::numeric_limits<double>::infinity();
    const int restarts = std::max(1, options.restarts);
    for (int r = 0; r < restarts; ++r) {
        MeasurementSet m;
        for (int k = 0; k < n; ++k) m.alice.push_back(random_unit(rng, options.real_plane));
        for (int k = 0; k < n; ++k) m.bob.push_back(random_unit(rng, options.real_plane));

        std::vector<double> trace;
        double value = objective(f, state, m);
        if (options.record_trace) trace.push_back(value);
        bool converged = false;
        int it = 0;
        for (; it < options.max_iterations; ++it) {
            optimize_party(alice_form(f, state, m.bob), m.alice, options.real_plane);
            if (options.record_trace) trace.push_back(objective(f, state, m));
            const double next = optimize_party(bob_form(f, state, m.alice), m.bob, options.real_plane);
            if (options.record_trace) trace.push_back(next);
            const double delta = next - value;
            value = next;
            if (std::abs(delta) < options.tolerance) {
                converged = true;
                ++it;
                break;
            }
        }
        value = objective(f, state, m);
        if (value > best.value) {
            best.value = value;
            best.measurements = m;
            best.converged = converged;
            best.iterations = it;
            best.trace = std::move(trace);
        }
    }
    best.restarts = restarts;
    return best;
}

SweepResult theta_sweep(const BellFunctional& f, int grid, const SeesawOptions& options) {
    if (grid < 2) throw std::invalid_argument("theta sweep needs at least 2 grid points");
    SweepResult out;
    for (int k = 0; k < grid; ++k) {
        const double theta = (std::numbers::pi / 4) * k / (grid - 1);
        SeesawOptions o = options;
        o.seed = options.seed + static_cast<std::uint64_t>(k);
        const auto r = seesaw_maximize(f, TwoQubitState::schmidt(theta), o);
        out.curve.push_back({theta, r.value});
        if (r.value > out.curve[out.argmax].value) out.argmax = out.curve.size() - 1;
    }
    return out;
}

}  // namespace nlbell::quantum
