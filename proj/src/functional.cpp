#include "nlbell/functional.hpp"

#include <stdexcept>
#include <string>

namespace nlbell {

namespace {

void require_at_least(int n, int min, const char* name) {
    if (n < min) {
        throw std::invalid_argument(std::string(name) + " needs N >= " + std::to_string(min) + ", got " +
                                    std::to_string(n));
    }
}

}  // namespace

std::vector<std::int64_t> BellFunctional::flattened() const {
    std::vector<std::int64_t> out;
    out.reserve(2 + alice.size() + bob.size() + static_cast<std::size_t>(joint.size()) * joint.size());
    out.push_back(settings());
    out.push_back(constant);
    out.insert(out.end(), alice.begin(), alice.end());
    out.insert(out.end(), bob.begin(), bob.end());
    const auto flat = joint.flat();
    out.insert(out.end(), flat.begin(), flat.end());
    return out;
}

BellFunctional BellFunctional::from_table(std::span<const std::int64_t> alice_marginals,
                                          std::span<const std::int64_t> bob_marginals,
                                          const std::vector<std::vector<std::int64_t>>& rows_by_bob) {
    const auto n = alice_marginals.size();
    if (bob_marginals.size() != n || rows_by_bob.size() != n) throw StructuralError("functional table is not N x N");
    BellFunctional f{Scenario(static_cast<int>(n))};
    for (std::size_t k = 0; k < n; ++k) {
        f.alice[k] = alice_marginals[k];
        f.bob[k] = bob_marginals[k];
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (rows_by_bob[j].size() != n) throw StructuralError("functional table is not N x N");
        for (std::size_t i = 0; i < n; ++i) f.joint(static_cast<int>(i), static_cast<int>(j)) = rows_by_bob[j][i];
    }
    return f;
}

BellFunctional make_chsh(int n) {
    require_at_least(n, 2, "CHSH");
    BellFunctional f{Scenario(n)};
    const int b0 = n == 2 ? 0 : 1;
    const int b1 = b0 + 1;
    f.alice[0] = -1;
    f.bob[b0] = -1;
    f.joint(0, b0) = 1;
    f.joint(1, b0) = 1;
    f.joint(0, b1) = 1;
    f.joint(1, b1) = -1;
    return f;
}

BellFunctional make_inn22(int n) {
    require_at_least(n, 2, "I_NN22");
    BellFunctional f{Scenario(n)};
    f.alice[0] = -1;
    for (int m = 0; m < n; ++m) {
        f.bob[m] = -(n - 1 - m);
        for (int k = 0; k <= n - m - 1; ++k) f.joint(k, m) = 1;
        if (m >= 1) f.joint(n - m, m) = -1;
    }
    return f;
}

BellFunctional make_mnn22(int n) {
    require_at_least(n, 3, "M_NN22");
    BellFunctional f = make_inn22(n);
    f.alice[0] = -(n - 1);
    return f;
}

// Row B_0 dropped; the -1 of row B_1 (at A_{N-1}) dropped.
BellFunctional make_c1(int n) {
    require_at_least(n, 3, "C_1");
    BellFunctional f{Scenario(n)};
    f.alice[0] = -(n - 2);
    for (int m = 1; m < n; ++m) {
        f.bob[m] = -(n - m - 1);
        for (int k = 0; k <= n - m - 1; ++k) f.joint(k, m) = 1;
        if (m >= 2) f.joint(n - m, m) = -1;
    }
    return f;
}

// I_{(N-1)(N-1)22} structure on Alice settings {0, 2, ..., N-1} and Bob settings {0, ..., N-2}.
BellFunctional make_c2(int n) {
    require_at_least(n, 3, "C_2");
    BellFunctional f{Scenario(n)};
    f.alice[0] = -(n - 2);
    for (int m = 0; m <= n - 2; ++m) {
        f.bob[m] = -(n - 2 - m);
        f.joint(0, m) = 1;
        for (int k = 2; k <= n - m - 1; ++k) f.joint(k, m) = 1;
        if (m >= 1) f.joint(n - m, m) = -1;
    }
    return f;
}

}  // namespace nlbell
