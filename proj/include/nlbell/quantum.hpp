#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"

namespace nlbell::quantum {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Pure two-qubit state in the basis |00>, |01>, |10>, |11>.
class TwoQubitState {
public:
    explicit TwoQubitState(std::array<std::complex<double>, 4> amplitudes);
    /// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4].
    static TwoQubitState schmidt(double theta);

    [[nodiscard]] const std::array<std::complex<double>, 4>& amplitudes() const noexcept { return psi_; }

    /// <sigma_k (x) 1>.
    [[nodiscard]] Vec3 alice_bloch() const noexcept { return alice_; }
    /// <1 (x) sigma_k>.
    [[nodiscard]] Vec3 bob_bloch() const noexcept { return bob_; }
    /// correlations()[k][l] = <sigma_k (x) sigma_l>.
    [[nodiscard]] const Mat3& correlations() const noexcept { return corr_; }

private:
    std::array<std::complex<double>, 4> psi_;
    Vec3 alice_{};
    Vec3 bob_{};
    Mat3 corr_{};
};

/// Unit Bloch vectors, one per setting; outcome 0 is the projector (1 + n.sigma)/2.
struct MeasurementSet {
    std::vector<Vec3> alice;
    std::vector<Vec3> bob;
};

FloatBehavior quantum_behavior(const TwoQubitState& state, const MeasurementSet& measurements);

struct SeesawOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_iterations = 5000;
    double tolerance = 1e-10;
    /// Restrict Bloch vectors to the x-z plane.
    bool real_plane = false;
    /// Record the objective after every half-step of the best run.
    bool record_trace = false;
};

struct SeesawResult {
    /// Value attained by returned measurements: a lower bound on the maximum for this state.
    double value = 0.0;
    MeasurementSet measurements;
    bool converged = false;
    int iterations = 0;
    int restarts = 0;
    std::vector<double> trace;
};

/// Alternating exact optimization of one party's projectors at a time.
SeesawResult seesaw_maximize(const BellFunctional& f, const TwoQubitState& state, const SeesawOptions& options = {});

struct SweepPoint {
    double theta;
    double value;
};

struct SweepResult {
    std::vector<SweepPoint> curve;
    std::size_t argmax = 0;
};

/// seesaw_maximize on a uniform grid over theta in [0, pi/4].
SweepResult theta_sweep(const BellFunctional& f, int grid, const SeesawOptions& options = {});

}  // namespace nlbell::quantum
