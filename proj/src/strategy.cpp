#include "nlbell/strategy.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace nlbell {

SettingChoice SettingChoice::parse(std::string_view name) {
    if (name == "0d") return deterministic(0);
    if (name == "1d") return deterministic(1);
    const bool flip = name.size() >= 3 && name.substr(name.size() - 2) == "mf";
    const auto stem_len = name.size() - (flip ? 2 : 1);
    if (name.size() < 2 || (!flip && name.back() != 'm') || stem_len == 0) {
        throw std::invalid_argument("unknown setting choice '" + std::string(name) +
                                    "'; expected 0d, 1d, <k>m or <k>mf");
    }
    int input = 0;
    for (char c : name.substr(0, stem_len)) {
        if (c < '0' || c > '9') throw std::invalid_argument("unknown setting choice '" + std::string(name) + "'");
        input = input * 10 + (c - '0');
    }
    return machine(input, flip);
}

std::string SettingChoice::name() const {
    if (is_deterministic()) return code_ == 0 ? "0d" : "1d";
    return std::to_string(input()) + (flipped() ? "mf" : "m");
}

namespace {

void check_limits(Scenario s, const EnumerationLimits& limits) {
    if (s.settings() > limits.max_settings) {
        throw std::invalid_argument("enumeration at N=" + std::to_string(s.settings()) + " exceeds the cap of " +
                                    std::to_string(limits.max_settings) +
                                    "; raise EnumerationLimits::max_settings (--cap) explicitly to proceed");
    }
}

void check_choices(const PartyChoice& choices, int n, const MachineSpec* machine, const char* who) {
    if (static_cast<int>(choices.size()) != n) {
        throw StructuralError(std::string(who) + " choices do not match the number of settings");
    }
    const int alphabet = alphabet_size(machine ? machine->inputs() : 0);
    for (const auto& c : choices) {
        if (c.code() < 0 || c.code() >= alphabet) {
            throw std::invalid_argument(std::string(who) + " choice " + c.name() + " references a missing machine input");
        }
    }
}

std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

/// Digits of index in base alphabet, most significant first.
void decode(std::uint64_t index, int alphabet, std::vector<int>& digits) {
    for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
        digits[k] = static_cast<int>(index % alphabet);
        index /= alphabet;
    }
}

PartyChoice to_choices(const std::vector<int>& digits) {
    PartyChoice out;
    out.reserve(digits.size());
    for (int d : digits) out.push_back(SettingChoice::from_code(d));
    return out;
}

}  // namespace

StrategyBehaviorBuilder::StrategyBehaviorBuilder(std::optional<MachineSpec> machine)
    : machine_(std::move(machine)), alphabet_(alphabet_size(machine_ ? machine_->inputs() : 0)) {
    marginal_.resize(alphabet_);
    joint_.resize(static_cast<std::size_t>(alphabet_) * alphabet_);
    for (int c = 0; c < alphabet_; ++c) {
        const auto sc = SettingChoice::from_code(c);
        marginal_[c] = sc.is_deterministic() ? (sc.output() == 0 ? 2 : 0) : 1;
    }
    for (int a = 0; a < alphabet_; ++a) {
        const auto ca = SettingChoice::from_code(a);
        for (int b = 0; b < alphabet_; ++b) {
            const auto cb = SettingChoice::from_code(b);
            int v = 0;
            if (ca.is_deterministic() && cb.is_deterministic()) {
                v = (ca.output() == 0 && cb.output() == 0) ? 2 : 0;
            } else if (ca.is_deterministic()) {
                v = ca.output() == 0 ? 1 : 0;
            } else if (cb.is_deterministic()) {
                v = cb.output() == 0 ? 1 : 0;
            } else {
                const bool anti = machine_->anticorrelates(ca.input(), cb.input());
                v = ((ca.flipped() != cb.flipped()) == anti) ? 1 : 0;
            }
            joint_[static_cast<std::size_t>(a) * alphabet_ + b] = v;
        }
    }
}

std::vector<std::int8_t> StrategyBehaviorBuilder::doubled(const PartyChoice& alice, const PartyChoice& bob) const {
    const int n = static_cast<int>(alice.size());
    std::vector<std::int8_t> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 2));
    for (const auto& c : alice) out.push_back(static_cast<std::int8_t>(marginal_[c.code()]));
    for (const auto& c : bob) out.push_back(static_cast<std::int8_t>(marginal_[c.code()]));
    for (const auto& ca : alice)
        for (const auto& cb : bob) out.push_back(static_cast<std::int8_t>(joint2(ca.code(), cb.code())));
    return out;
}

BehaviorPoint StrategyBehaviorBuilder::operator()(const PartyChoice& alice, const PartyChoice& bob) const {
    const int n = static_cast<int>(alice.size());
    const MachineSpec* machine = machine_ ? &*machine_ : nullptr;
    check_choices(alice, n, machine, "alice");
    check_choices(bob, n, machine, "bob");
    const Scenario scenario(n);
    const auto d = doubled(alice, bob);
    std::vector<Rational> coords;
    coords.reserve(d.size());
    for (auto v : d) coords.emplace_back(v, 2);
    return BehaviorPoint::from_coordinates(scenario, coords);
}

BehaviorPoint strategy_behavior(const WiringStrategy& s) {
    return StrategyBehaviorBuilder(s.machine)(s.alice, s.bob);
}

std::vector<BehaviorPoint> enumerate_local(Scenario s, EnumerationLimits limits) {
    check_limits(s, limits);
    const int n = s.settings();
    std::vector<BehaviorPoint> out;
    out.reserve(std::size_t{1} << (2 * n));
    std::vector<int> a(n), b(n);
    for (unsigned am = 0; am < (1u << n); ++am) {
        for (int i = 0; i < n; ++i) a[i] = static_cast<int>((am >> (n - 1 - i)) & 1u);
        for (unsigned bm = 0; bm < (1u << n); ++bm) {
            for (int j = 0; j < n; ++j) b[j] = static_cast<int>((bm >> (n - 1 - j)) & 1u);
            out.push_back(deterministic_point(a, b));
        }
    }
    return out;
}

OneMachineStrategies::OneMachineStrategies(Scenario s, MachineSpec machine, EnumerationLimits limits)
    : scenario_(s), machine_(std::move(machine)) {
    check_limits(s, limits);
}

std::uint64_t OneMachineStrategies::size() const {
    return power(static_cast<std::uint64_t>(alphabet_size(machine_.inputs())), 2 * scenario_.settings());
}

OneMachineStrategies::iterator::iterator(const OneMachineStrategies& owner, bool done)
    : digits_(static_cast<std::size_t>(2 * owner.scenario_.settings()), 0),
      alphabet_(alphabet_size(owner.machine_.inputs())),
      done_(done) {
    const int n = owner.scenario_.settings();
    current_.machine = owner.machine_;
    current_.alice.assign(n, SettingChoice::deterministic(0));
    current_.bob.assign(n, SettingChoice::deterministic(0));
}

OneMachineStrategies::iterator& OneMachineStrategies::iterator::operator++() {
    const int n = static_cast<int>(current_.alice.size());
    for (int k = 2 * n - 1; k >= 0; --k) {
        if (++digits_[k] < alphabet_) {
            auto& slot = k < n ? current_.alice[k] : current_.bob[k - n];
            slot = SettingChoice::from_code(digits_[k]);
            return *this;
        }
        digits_[k] = 0;
        auto& slot = k < n ? current_.alice[k] : current_.bob[k - n];
        slot = SettingChoice::from_code(0);
    }
    done_ = true;
    return *this;
}

OneMachineStrategies enumerate_one_machine(Scenario s, MachineSpec machine, EnumerationLimits limits) {
    return OneMachineStrategies(s, std::move(machine), limits);
}

namespace {

struct ChunkResult {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::vector<SaturatingGroup> groups;
};

/// Doubled objective pieces for a fixed functional and machine.
struct DoubledObjective {
    int n;
    const StrategyBehaviorBuilder& t;
    const BellFunctional& f;

    [[nodiscard]] std::int64_t alice_part(const std::vector<int>& a) const {
        std::int64_t v = 2 * f.constant;
        for (int i = 0; i < n; ++i) v += f.alice[i] * t.marginal2(a[i]);
        return v;
    }
    [[nodiscard]] std::int64_t bob_term(const std::vector<int>& a, int j, int d) const {
        std::int64_t v = f.bob[j] * t.marginal2(d);
        for (int i = 0; i < n; ++i) v += f.joint(i, j) * t.joint2(a[i], d);
        return v;
    }
};

ChunkResult optimize_chunk(const DoubledObjective& obj, std::uint64_t first, std::uint64_t last) {
    ChunkResult out;
    const int n = obj.n;
    const int alphabet = obj.t.alphabet();
    std::vector<int> a(n);
    std::vector<std::int64_t> term(alphabet);
    for (std::uint64_t idx = first; idx < last; ++idx) {
        decode(idx, alphabet, a);
        std::int64_t value = obj.alice_part(a);
        std::vector<std::vector<SettingChoice>> options(n);
        for (int j = 0; j < n; ++j) {
            std::int64_t best_j = std::numeric_limits<std::int64_t>::min();
            for (int d = 0; d < alphabet; ++d) {
                term[d] = obj.bob_term(a, j, d);
                best_j = std::max(best_j, term[d]);
            }
            for (int d = 0; d < alphabet; ++d)
                if (term[d] == best_j) options[j].push_back(SettingChoice::from_code(d));
            value += best_j;
        }
        if (value > out.best) {
            out.best = value;
            out.groups.clear();
        }
        if (value == out.best) out.groups.push_back({to_choices(a), std::move(options)});
    }
    return out;
}

}  // namespace

OneMachineMaximum max_over_one_machine(const BellFunctional& f, const MachineSpec& machine,
                                       const OptimizerOptions& options) {
    check_limits(f.scenario, options.limits);
    const StrategyBehaviorBuilder tables(machine);
    const DoubledObjective obj{f.settings(), tables, f};
    const std::uint64_t total = power(static_cast<std::uint64_t>(tables.alphabet()), obj.n);

    const auto workers = static_cast<std::uint64_t>(std::clamp(options.threads, 1, 64));
    std::vector<ChunkResult> chunks(std::min<std::uint64_t>(workers, total));
    const std::uint64_t step = (total + chunks.size() - 1) / chunks.size();
    if (chunks.size() == 1) {
        chunks[0] = optimize_chunk(obj, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            const std::uint64_t lo = c * step;
            const std::uint64_t hi = std::min(total, lo + step);
            pool.emplace_back([&, c, lo, hi] { chunks[c] = optimize_chunk(obj, lo, hi); });
        }
        for (auto& th : pool) th.join();
    }

    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (const auto& c : chunks) best = std::max(best, c.best);

    OneMachineMaximum out;
    out.value = Rational(best, 2);
    for (auto& c : chunks) {
        if (c.best != best) continue;
        for (auto& g : c.groups) out.groups.push_back(std::move(g));
    }

    const auto& first = out.groups.front();
    out.witness.machine = machine;
    out.witness.alice = first.alice;
    for (const auto& opts : first.bob_options) out.witness.bob.push_back(opts.front());

    for (const auto& g : out.groups) {
        std::uint64_t count = 1;
        for (const auto& opts : g.bob_options) count *= opts.size();
        out.saturating_count += count;

        std::vector<std::size_t> pos(g.bob_options.size(), 0);
        for (std::uint64_t k = 0; k < count; ++k) {
            if (out.saturating.size() >= options.collect_cap) {
                out.saturating_truncated = true;
                break;
            }
            WiringStrategy s{machine, g.alice, {}};
            for (std::size_t j = 0; j < pos.size(); ++j) s.bob.push_back(g.bob_options[j][pos[j]]);
            out.saturating.push_back(std::move(s));
            for (int j = static_cast<int>(pos.size()) - 1; j >= 0; --j) {
                if (++pos[j] < g.bob_options[j].size()) break;
                pos[j] = 0;
            }
        }
    }
    return out;
}

namespace {

struct TermPair {
    std::int64_t u;
    std::int64_t v;
    int code;
};

std::vector<TermPair> pareto_front(std::vector<TermPair> terms) {
    std::vector<TermPair> out;
    for (const auto& t : terms) {
        bool dominated = false;
        for (const auto& o : terms) {
            if (o.u >= t.u && o.v >= t.v && (o.u > t.u || o.v > t.v || o.code < t.code)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(t);
    }
    return out;
}

struct PairSearch {
    std::vector<std::vector<TermPair>> options;
    std::vector<std::int64_t> rest_u;
    std::vector<std::int64_t> rest_v;
    std::int64_t best;
    std::vector<int> current;
    std::vector<int> best_choice;
    bool improved = false;

    void run(std::size_t j, std::int64_t u, std::int64_t v) {
        if (std::min(u + rest_u[j], v + rest_v[j]) <= best) return;
        if (j == options.size()) {
            best = std::min(u, v);
            best_choice = current;
            improved = true;
            return;
        }
        for (const auto& t : options[j]) {
            current[j] = t.code;
            run(j + 1, u + t.u, v + t.v);
        }
    }
};

}  // namespace

PairMaximum max_min_over_one_machine(const BellFunctional& f1, const BellFunctional& f2, const MachineSpec& machine,
                                     EnumerationLimits limits) {
    if (f1.scenario != f2.scenario) throw StructuralError("functionals have different scenarios");
    check_limits(f1.scenario, limits);
    const StrategyBehaviorBuilder tables(machine);
    const DoubledObjective o1{f1.settings(), tables, f1};
    const DoubledObjective o2{f2.settings(), tables, f2};
    const int n = o1.n;
    const int alphabet = tables.alphabet();
    const std::uint64_t total = power(static_cast<std::uint64_t>(alphabet), n);

    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    PairMaximum out;
    std::vector<int> a(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode(idx, alphabet, a);
        PairSearch search;
        search.options.resize(n);
        search.rest_u.assign(n + 1, 0);
        search.rest_v.assign(n + 1, 0);
        for (int j = 0; j < n; ++j) {
            std::vector<TermPair> terms;
            for (int d = 0; d < alphabet; ++d) terms.push_back({o1.bob_term(a, j, d), o2.bob_term(a, j, d), d});
            search.options[j] = pareto_front(std::move(terms));
        }
        for (int j = n - 1; j >= 0; --j) {
            std::int64_t mu = std::numeric_limits<std::int64_t>::min();
            std::int64_t mv = std::numeric_limits<std::int64_t>::min();
            for (const auto& t : search.options[j]) {
                mu = std::max(mu, t.u);
                mv = std::max(mv, t.v);
            }
            search.rest_u[j] = search.rest_u[j + 1] + mu;
            search.rest_v[j] = search.rest_v[j + 1] + mv;
        }
        search.best = best;
        search.current.assign(n, 0);
        search.run(0, o1.alice_part(a), o2.alice_part(a));
        if (search.improved) {
            best = search.best;
            out.witness = WiringStrategy{machine, to_choices(a), to_choices(search.best_choice)};
        }
    }
    out.value = Rational(best, 2);
    return out;
}

}  // namespace nlbell
