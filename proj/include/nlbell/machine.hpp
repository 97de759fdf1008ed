#pragma once

#include <set>
#include <utility>
#include <vector>

#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"

namespace nlbell {

using InputPair = std::pair<int, int>;

/// Binary-output non-local machine with uniform marginals.
///
/// Outputs satisfy a XOR b = 1 on the anticorrelated input pairs and
/// a XOR b = 0 everywhere else.
class MachineSpec {
public:
    MachineSpec(int n_inputs, std::set<InputPair> anticorrelated);

    [[nodiscard]] int inputs() const noexcept { return n_inputs_; }
    [[nodiscard]] const std::set<InputPair>& anticorrelated() const noexcept { return anticorrelated_; }
    [[nodiscard]] bool anticorrelates(int x, int y) const { return anticorrelated_.contains({x, y}); }

    friend bool operator==(const MachineSpec&, const MachineSpec&) = default;

private:
    int n_inputs_;
    std::set<InputPair> anticorrelated_;
};

/// The two-input PR-box, a XOR b = x y.
MachineSpec pr_box();
/// PR_N: recipe applied to I_NN22.
MachineSpec pr_n(int n);

/// Joint coefficient -1 becomes anticorrelation; +1 and 0 stay correlated.
MachineSpec recipe(const BellFunctional& f);

BehaviorPoint machine_behavior(const MachineSpec& m);

/// True iff m has 3 inputs and anticorrelates exactly where floor(x y / 2) is odd.
bool pr3_formula_check(const MachineSpec& m);

/// Output relabeling: flipping a party's output on one input toggles that whole row/column.
MachineSpec relabel_outputs(const MachineSpec& m, const std::vector<bool>& alice_flips,
                            const std::vector<bool>& bob_flips);

using BitMatrix = std::vector<std::vector<int>>;

/// Non-adaptive wiring of several PR-boxes: row x of alice gives the input bit
/// fed to each box when Alice's top-level input is x; each party outputs the
/// XOR of all box outputs.
struct WiringTable {
    BitMatrix alice;
    BitMatrix bob;

    [[nodiscard]] int boxes() const;
    friend bool operator==(const WiringTable&, const WiringTable&) = default;
};

/// S_A S_B^T over GF(2).
BitMatrix parity_matrix(const WiringTable& w);

MachineSpec wire_pr_boxes(const WiringTable& w);

/// N-1 boxes; box k anticorrelates the single pair (N-k, k).
WiringTable make_prn_wiring(int n);

/// Rank over GF(2).
int gf2_rank(BitMatrix m);

/// Indicator matrix of a machine's anticorrelation set.
BitMatrix anticorrelation_matrix(const MachineSpec& m);

}  // namespace nlbell
