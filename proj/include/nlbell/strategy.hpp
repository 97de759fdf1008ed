#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlbell/behavior.hpp"
#include "nlbell/functional.hpp"
#include "nlbell/machine.hpp"

namespace nlbell {

/// What a party does for one setting: output a fixed bit, or feed input k to
/// the shared machine and optionally flip its output.
///
/// Encoded as det0 = 0, det1 = 1, machine(k) = 2 + 2k, flipped(k) = 3 + 2k;
/// the encoding order is the tie-break order everywhere.
class SettingChoice {
public:
    static constexpr SettingChoice deterministic(int bit) { return SettingChoice(bit == 0 ? 0 : 1); }
    static constexpr SettingChoice machine(int input, bool flip = false) {
        return SettingChoice(2 + 2 * input + (flip ? 1 : 0));
    }
    static constexpr SettingChoice from_code(int code) { return SettingChoice(code); }
    /// "0d", "1d", "km", "kmf".
    static SettingChoice parse(std::string_view name);

    [[nodiscard]] constexpr int code() const noexcept { return code_; }
    [[nodiscard]] constexpr bool is_deterministic() const noexcept { return code_ < 2; }
    [[nodiscard]] constexpr int output() const noexcept { return code_; }
    [[nodiscard]] constexpr int input() const noexcept { return (code_ - 2) / 2; }
    [[nodiscard]] constexpr bool flipped() const noexcept { return code_ >= 2 && (code_ % 2) == 1; }
    [[nodiscard]] std::string name() const;

    friend constexpr auto operator<=>(const SettingChoice&, const SettingChoice&) = default;

private:
    explicit constexpr SettingChoice(int code) : code_(code) {}
    int code_;
};

/// Options available per setting with a machine of k inputs: 2 + 2k.
constexpr int alphabet_size(int machine_inputs) { return 2 + 2 * machine_inputs; }

using PartyChoice = std::vector<SettingChoice>;

struct WiringStrategy {
    std::optional<MachineSpec> machine;
    PartyChoice alice;
    PartyChoice bob;

    friend bool operator==(const WiringStrategy&, const WiringStrategy&) = default;
};

BehaviorPoint strategy_behavior(const WiringStrategy& s);

/// Reusable behavior construction for many strategies over one machine.
///
/// Every entry of a one-machine behavior is 0, 1/2 or 1, so entries are also
/// available doubled as small integers.
class StrategyBehaviorBuilder {
public:
    explicit StrategyBehaviorBuilder(std::optional<MachineSpec> machine);

    [[nodiscard]] int alphabet() const noexcept { return alphabet_; }
    /// 2 P(out = 0) for a choice code.
    [[nodiscard]] int marginal2(int code) const { return marginal_[code]; }
    /// 2 P(0, 0) for an (alice code, bob code) pair.
    [[nodiscard]] int joint2(int alice_code, int bob_code) const {
        return joint_[static_cast<std::size_t>(alice_code) * alphabet_ + bob_code];
    }

    [[nodiscard]] BehaviorPoint operator()(const PartyChoice& alice, const PartyChoice& bob) const;
    /// Doubled coordinates in BehaviorPoint::coordinates() order.
    [[nodiscard]] std::vector<std::int8_t> doubled(const PartyChoice& alice, const PartyChoice& bob) const;

private:
    std::optional<MachineSpec> machine_;
    int alphabet_;
    std::vector<int> marginal_;
    std::vector<int> joint_;
};

/// Enumeration guard for the exponential enumerations below.
struct EnumerationLimits {
    int max_settings = 6;
};

/// All 4^N deterministic points, Alice's outputs most significant.
std::vector<BehaviorPoint> enumerate_local(Scenario s, EnumerationLimits limits = {});

/// Lazily enumerates every (alice, bob) pair of one-machine wirings in
/// lexicographic order of the choice encoding, Alice before Bob.
class OneMachineStrategies {
public:
    OneMachineStrategies(Scenario s, MachineSpec machine, EnumerationLimits limits = {});

    class iterator {
    public:
        using value_type = WiringStrategy;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const WiringStrategy& operator*() const { return current_; }
        const WiringStrategy* operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.digits_ == b.digits_); }

    private:
        friend class OneMachineStrategies;
        iterator(const OneMachineStrategies& owner, bool done);
        std::vector<int> digits_;
        int alphabet_ = 0;
        bool done_ = true;
        WiringStrategy current_;
    };

    [[nodiscard]] iterator begin() const { return iterator(*this, false); }
    [[nodiscard]] iterator end() const { return iterator(*this, true); }
    /// alphabet^(2N).
    [[nodiscard]] std::uint64_t size() const;
    [[nodiscard]] Scenario scenario() const noexcept { return scenario_; }
    [[nodiscard]] const MachineSpec& machine() const noexcept { return machine_; }

private:
    Scenario scenario_;
    MachineSpec machine_;
};

OneMachineStrategies enumerate_one_machine(Scenario s, MachineSpec machine, EnumerationLimits limits = {});

/// Alice choices attaining the maximum together with, per Bob setting, every
/// choice attaining the per-setting optimum. The saturating strategies for
/// this Alice vector are exactly the product of bob_options.
struct SaturatingGroup {
    PartyChoice alice;
    std::vector<std::vector<SettingChoice>> bob_options;
};

struct OneMachineMaximum {
    Rational value;
    WiringStrategy witness;
    /// Saturating strategies in lexicographic order, up to collect_cap.
    std::vector<WiringStrategy> saturating;
    bool saturating_truncated = false;
    std::uint64_t saturating_count = 0;
    std::vector<SaturatingGroup> groups;
};

struct OptimizerOptions {
    std::size_t collect_cap = 200000;
    int threads = 1;
    EnumerationLimits limits{};
};

/// Exact maximum of f over all single-machine wirings.
///
/// Alice's choice vectors are enumerated; given one, each Bob setting's
/// contribution depends only on Bob's choice there, so Bob is maximized
/// setting by setting.
OneMachineMaximum max_over_one_machine(const BellFunctional& f, const MachineSpec& machine,
                                       const OptimizerOptions& options = {});

struct PairMaximum {
    Rational value;  // max over strategies of min(f1, f2)
    WiringStrategy witness;
};

/// Exact max of min(f1(s), f2(s)) over single-machine wirings.
PairMaximum max_min_over_one_machine(const BellFunctional& f1, const BellFunctional& f2, const MachineSpec& machine,
                                     EnumerationLimits limits = {});

}  // namespace nlbell
