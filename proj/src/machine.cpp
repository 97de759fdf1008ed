#include "nlbell/machine.hpp"

#include <stdexcept>
#include <string>

namespace nlbell {

MachineSpec::MachineSpec(int n_inputs, std::set<InputPair> anticorrelated)
    : n_inputs_(n_inputs), anticorrelated_(std::move(anticorrelated)) {
    if (n_inputs < 1) throw std::invalid_argument("machine needs at least one input");
    for (const auto& [x, y] : anticorrelated_) {
        if (x < 0 || y < 0 || x >= n_inputs || y >= n_inputs) {
            throw std::invalid_argument("anticorrelated pair (" + std::to_string(x) + "," + std::to_string(y) +
                                        ") out of range for " + std::to_string(n_inputs) + " inputs");
        }
    }
}

MachineSpec pr_box() { return MachineSpec(2, {{1, 1}}); }

MachineSpec pr_n(int n) { return recipe(make_inn22(n)); }

MachineSpec recipe(const BellFunctional& f) {
    const int n = f.settings();
    std::set<InputPair> anti;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto c = f.joint(i, j);
            if (c < -1 || c > 1) {
                throw std::invalid_argument("recipe is undefined for joint coefficient " + std::to_string(c) +
                                            " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            if (c == -1) anti.insert({i, j});
        }
    }
    return MachineSpec(n, std::move(anti));
}

BehaviorPoint machine_behavior(const MachineSpec& m) {
    BehaviorPoint p{Scenario(m.inputs())};
    const Rational half(1, 2);
    for (int k = 0; k < m.inputs(); ++k) {
        p.alice[k] = half;
        p.bob[k] = half;
    }
    for (int i = 0; i < m.inputs(); ++i)
        for (int j = 0; j < m.inputs(); ++j) p.joint(i, j) = m.anticorrelates(i, j) ? Rational(0) : half;
    return p;
}

bool pr3_formula_check(const MachineSpec& m) {
    if (m.inputs() != 3) throw std::invalid_argument("pr3_formula_check needs a 3-input machine");
    std::set<InputPair> expected;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if ((x * y / 2) % 2 == 1) expected.insert({x, y});
    return m.anticorrelated() == expected;
}

MachineSpec relabel_outputs(const MachineSpec& m, const std::vector<bool>& alice_flips,
                            const std::vector<bool>& bob_flips) {
    const int n = m.inputs();
    if (static_cast<int>(alice_flips.size()) != n || static_cast<int>(bob_flips.size()) != n) {
        throw StructuralError("flip vectors must have one entry per machine input");
    }
    std::set<InputPair> anti;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m.anticorrelates(x, y) != (alice_flips[x] != bob_flips[y])) anti.insert({x, y});
    return MachineSpec(n, std::move(anti));
}

int WiringTable::boxes() const { return alice.empty() ? 0 : static_cast<int>(alice.front().size()); }

namespace {

void check_bits(const BitMatrix& m, std::size_t cols, const char* who) {
    for (const auto& row : m) {
        if (row.size() != cols) throw StructuralError(std::string(who) + " wiring rows have inconsistent lengths");
        for (int b : row) {
            if (b != 0 && b != 1) throw std::invalid_argument(std::string(who) + " wiring entries must be bits");
        }
    }
}

}  // namespace

BitMatrix parity_matrix(const WiringTable& w) {
    if (w.alice.size() != w.bob.size()) {
        throw StructuralError("wiring tables need the same number of top-level inputs on both sides");
    }
    if (w.alice.empty()) throw StructuralError("wiring has no inputs");
    const std::size_t boxes = w.alice.front().size();
    check_bits(w.alice, boxes, "alice");
    check_bits(w.bob, boxes, "bob");

    const std::size_t k = w.alice.size();
    BitMatrix p(k, std::vector<int>(k, 0));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            int bit = 0;
            for (std::size_t b = 0; b < boxes; ++b) bit ^= w.alice[x][b] & w.bob[y][b];
            p[x][y] = bit;
        }
    return p;
}

MachineSpec wire_pr_boxes(const WiringTable& w) {
    const auto p = parity_matrix(w);
    const int k = static_cast<int>(p.size());
    std::set<InputPair> anti;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (p[x][y] == 1) anti.insert({x, y});
    return MachineSpec(k, std::move(anti));
}

WiringTable make_prn_wiring(int n) {
    if (n < 2) throw std::invalid_argument("PR_N wiring needs N >= 2");
    const int boxes = n - 1;
    WiringTable w{BitMatrix(n, std::vector<int>(boxes, 0)), BitMatrix(n, std::vector<int>(boxes, 0))};
    for (int k = 1; k <= boxes; ++k) {
        w.alice[n - k][k - 1] = 1;
        w.bob[k][k - 1] = 1;
    }
    return w;
}

int gf2_rank(BitMatrix m) {
    int rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != static_cast<std::size_t>(rank) && m[r][c] == 1) {
                for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
            }
        }
        ++rank;
    }
    return rank;
}

BitMatrix anticorrelation_matrix(const MachineSpec& m) {
    BitMatrix out(m.inputs(), std::vector<int>(m.inputs(), 0));
    for (const auto& [x, y] : m.anticorrelated()) out[x][y] = 1;
    return out;
}

}  // namespace nlbell
