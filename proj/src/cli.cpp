#include "nlbell/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nlbell/json_io.hpp"
#include "nlbell/polytope.hpp"
#include "nlbell/quantum.hpp"
#include "nlbell/symmetry.hpp"
#include "nlbell/table_format.hpp"

namespace nlbell::cli {

namespace {

using io::Json;

const char* const kFamilies = "CHSH, I, M, C1, C2, I<N><N>22, M<N><N>22";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::optional<int> parse_spelled(const std::string& name, char family) {
    // "I3322" -> 3, "M101022" -> 10
    if (name.size() < 5 || name.front() != family || name.substr(name.size() - 2) != "22") return std::nullopt;
    const std::string digits = name.substr(1, name.size() - 3);
    if (digits.size() % 2 != 0) return std::nullopt;
    const std::string half = digits.substr(0, digits.size() / 2);
    if (half != digits.substr(digits.size() / 2) || half.find_first_not_of("0123456789") != std::string::npos) {
        return std::nullopt;
    }
    return std::stoi(half);
}

struct Common {
    std::string format = "table";
    std::uint64_t seed = 0;
    int threads = 1;
    int cap = 6;
};

struct FunctionalArgs {
    std::string family;
    std::optional<int> n;
    std::string file;

    void add_to(CLI::App* app, const char* family_flag = "--family") {
        app->add_option(family_flag, family, std::string("named functional: ") + kFamilies);
        app->add_option("--n", n, "number of settings");
        app->add_option("--functional", file, "functional JSON file");
    }
    [[nodiscard]] BellFunctional resolve() const {
        if (!file.empty()) return io::functional_from_json(read_json(file));
        if (family.empty()) throw UsageError("give a functional with --family/--ineq or --functional");
        return functional_by_name(family, n);
    }
};

OptimizerOptions optimizer_options(const Common& c) {
    OptimizerOptions o;
    o.threads = c.threads;
    o.limits.max_settings = c.cap;
    return o;
}

}  // namespace

BellFunctional functional_by_name(const std::string& name, std::optional<int> n) {
    auto need_n = [&]() {
        if (!n) throw UsageError("family '" + name + "' needs --n");
        return *n;
    };
    if (name == "CHSH") return make_chsh(n.value_or(2));
    if (name == "I" || name == "INN22") return make_inn22(need_n());
    if (name == "M" || name == "MNN22") return make_mnn22(need_n());
    if (name == "C1") return make_c1(need_n());
    if (name == "C2") return make_c2(need_n());
    if (auto k = parse_spelled(name, 'I')) return make_inn22(*k);
    if (auto k = parse_spelled(name, 'M')) return make_mnn22(*k);
    throw UsageError("unknown functional family '" + name + "'; valid: " + kFamilies);
}

MachineSpec machine_by_name(const std::string& name) {
    if (name == "pr") return pr_box();
    if (name.rfind("pr:", 0) == 0) {
        const auto tail = name.substr(3);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("bad machine '" + name + "'; expected pr or pr:N");
        }
        return pr_n(std::stoi(tail));
    }
    throw UsageError("unknown machine '" + name + "'; expected pr or pr:N");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bell-type inequalities with non-local resources: exact polytope tools and see-saw optimization"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--seed", common.seed, "random seed");
    app.add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", common.cap, "largest N accepted by exhaustive enumerations");

    int status = kOk;

    // gen
    auto* gen = app.add_subcommand("gen", "print a named functional");
    FunctionalArgs gen_f;
    gen->add_option("--family", gen_f.family, std::string("one of ") + kFamilies)->required();
    gen->add_option("--n", gen_f.n, "number of settings");
    gen->callback([&] {
        const auto f = gen_f.resolve();
        if (common.format == "json") {
            emit_json(out, io::to_json(f));
        } else {
            out << io::render_table(f);
        }
    });

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a functional on a behavior");
    FunctionalArgs eval_f;
    eval_f.add_to(eval);
    std::string eval_behavior, eval_machine_file, eval_machine;
    eval->add_option("--behavior", eval_behavior, "behavior JSON file");
    eval->add_option("--machine-file", eval_machine_file, "machine JSON file (its behavior is used)");
    eval->add_option("--machine", eval_machine, "pr or pr:N (its behavior is used)");
    eval->callback([&] {
        const auto f = eval_f.resolve();
        std::string value;
        if (!eval_behavior.empty()) {
            const auto doc = read_json(eval_behavior);
            if (io::behavior_backend(doc) == "float") {
                value = io::format_double(evaluate(f, io::float_behavior_from_json(doc)));
            } else {
                value = evaluate(f, io::exact_behavior_from_json(doc)).to_string();
            }
        } else if (!eval_machine_file.empty() || !eval_machine.empty()) {
            const auto m = eval_machine_file.empty() ? machine_by_name(eval_machine)
                                                     : io::machine_from_json(read_json(eval_machine_file));
            value = evaluate(f, machine_behavior(m)).to_string();
        } else {
            throw UsageError("eval needs --behavior, --machine or --machine-file");
        }
        if (common.format == "json") {
            emit_json(out, Json{{"value", value}});
        } else {
            out << value << '\n';
        }
    });

    // machine
    auto* machine = app.add_subcommand("machine", "build and check non-local machines");
    machine->require_subcommand(1);
    auto emit_machine = [&](const MachineSpec& m) {
        if (common.format == "json") {
            emit_json(out, io::to_json(m));
            return;
        }
        out << "inputs: " << m.inputs() << "\nanticorrelated:";
        for (const auto& [x, y] : m.anticorrelated()) out << " (" << x << "," << y << ")";
        out << '\n' << io::render_table(machine_behavior(m));
    };
    auto* recipe_cmd = machine->add_subcommand("recipe", "machine from a functional's joint coefficients");
    FunctionalArgs recipe_f;
    recipe_f.add_to(recipe_cmd);
    recipe_cmd->callback([&] { emit_machine(recipe(recipe_f.resolve())); });

    auto* wire_cmd = machine->add_subcommand("wire", "machine from a wiring of PR-boxes");
    std::string wiring_file;
    std::optional<int> wire_prn;
    wire_cmd->add_option("--wiring", wiring_file, "wiring JSON file");
    wire_cmd->add_option("--prn", wire_prn, "use the standard N-1 box wiring for PR_N");
    wire_cmd->callback([&] {
        WiringTable w;
        if (!wiring_file.empty()) {
            w = io::wiring_from_json(read_json(wiring_file));
        } else if (wire_prn) {
            w = make_prn_wiring(*wire_prn);
        } else {
            throw UsageError("machine wire needs --wiring or --prn");
        }
        const auto m = wire_pr_boxes(w);
        if (common.format == "json") {
            emit_json(out, Json{{"wiring", io::to_json(w)}, {"machine", io::to_json(m)}});
            return;
        }
        out << "boxes: " << w.boxes() << "\nparity matrix:\n";
        for (const auto& row : parity_matrix(w)) {
            for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
            out << '\n';
        }
        emit_machine(m);
    });

    auto* check_cmd = machine->add_subcommand("check", "test a 3-input machine against floor(xy/2) = a+b mod 2");
    std::string check_file, check_name;
    check_cmd->add_option("--machine-file", check_file, "machine JSON file");
    check_cmd->add_option("--machine", check_name, "pr or pr:N");
    check_cmd->callback([&] {
        const auto m = !check_file.empty() ? io::machine_from_json(read_json(check_file))
                                           : machine_by_name(check_name.empty() ? "pr:3" : check_name);
        const bool ok = pr3_formula_check(m);
        if (common.format == "json") {
            emit_json(out, Json{{"pr3_formula", ok}});
        } else {
            out << (ok ? "true" : "false") << '\n';
        }
    });

    // enum-local
    auto* enum_local = app.add_subcommand("enum-local", "enumerate deterministic local points");
    int local_n = 2;
    enum_local->add_option("--n", local_n, "number of settings")->required();
    enum_local->callback([&] {
        const auto points = enumerate_local(Scenario(local_n), {common.cap});
        if (common.format == "json") {
            Json list = Json::array();
            for (const auto& p : points) list.push_back(io::to_json(p));
            emit_json(out, Json{{"count", points.size()}, {"points", std::move(list)}});
        } else {
            out << "local vertices: " << points.size() << '\n';
        }
    });

    // enum-ns
    auto* enum_ns = app.add_subcommand("enum-ns", "non-local vertices from single-machine wirings");
    int ns_n = 3;
    bool classify = false;
    enum_ns->add_option("--n", ns_n, "2 or 3")->check(CLI::IsMember({2, 3}));
    enum_ns->add_flag("--classify", classify, "label N=3 vertices S1..S4");
    enum_ns->callback([&] {
        Json list = Json::array();
        std::map<std::string, std::size_t> counts;
        std::size_t total = 0;
        if (ns_n == 2) {
            const auto points = nonlocal_wiring_points(Scenario(2), pr_box(), orbit(make_chsh(2)), {common.cap});
            total = points.size();
            for (const auto& p : points) list.push_back(io::to_json(p));
        } else {
            const auto vertices = enumerate_ns_vertices_n3();
            total = vertices.size();
            for (const auto& v : vertices) {
                auto doc = io::to_json(v.point);
                if (classify) {
                    doc["class"] = to_string(v.label);
                    ++counts[to_string(v.label)];
                }
                list.push_back(std::move(doc));
            }
        }
        if (common.format == "json") {
            Json doc{{"n", ns_n}, {"nonlocal", total}, {"local", std::size_t{1} << (2 * ns_n)}};
            if (classify) doc["classes"] = counts;
            doc["points"] = std::move(list);
            emit_json(out, doc);
        } else {
            out << "local vertices: " << (std::size_t{1} << (2 * ns_n)) << "\nnon-local vertices: " << total << '\n';
            for (const auto& [label, count] : counts) out << label << ": " << count << '\n';
        }
    });

    // census
    auto* census_cmd = app.add_subcommand("census", "violation table of the N=3 non-local vertex classes");
    census_cmd->callback([&] {
        const auto facets = local_facets_n3();
        const auto census = violation_census(enumerate_ns_vertices_n3(facets), facets);
        if (common.format == "json") {
            emit_json(out, io::census_to_json(census));
        } else {
            out << io::render_census(census);
        }
    });

    // verify-facet
    auto* verify = app.add_subcommand("verify-facet", "certify a functional as a facet of a strategy class");
    FunctionalArgs verify_f;
    verify_f.add_to(verify, "--ineq");
    std::string strategy_class = "local";
    verify->add_option("--class", strategy_class, "local | box:pr | box:pr:N");
    verify->callback([&] {
        const auto f = verify_f.resolve();
        StrategyClass cls = StrategyClass::local();
        if (strategy_class.rfind("box:", 0) == 0) {
            cls = StrategyClass::one_machine(machine_by_name(strategy_class.substr(4)));
        } else if (strategy_class != "local") {
            throw UsageError("unknown class '" + strategy_class + "'; expected local, box:pr or box:pr:N");
        }
        const auto cert = verify_facet(f, cls, optimizer_options(common));
        if (common.format == "json") {
            emit_json(out, io::to_json(cert));
        } else {
            out << "class: " << cert.strategy_class.label() << "\nmax: " << cert.max_value
                << "\nsaturating strategies: " << cert.saturating_strategies
                << "\ndistinct saturating points: " << cert.saturating_points.size() << " ("
                << cert.deterministic_saturating << " deterministic, " << cert.machine_saturating
                << " machine)\naffine rank: " << cert.affine_rank << " (dimension " << cert.dimension
                << ")\naccepted: " << (cert.accepted() ? "yes" : "no") << '\n';
            if (cert.witness) out << "violating witness: " << io::to_json(*cert.witness).dump() << '\n';
        }
        if (!cert.accepted()) status = kRejected;
    });

    // lemma1
    auto* lemma = app.add_subcommand("lemma1", "sample points violating M_NN22 and check C_1, C_2");
    int lemma_n = 3;
    std::size_t lemma_samples = 10000;
    lemma->add_option("--n", lemma_n, "number of settings")->required();
    lemma->add_option("--samples", lemma_samples, "samples with M_NN22 > 0");
    lemma->callback([&] {
        const auto report = check_lemma1(lemma_n, lemma_samples, common.seed);
        if (common.format == "json") {
            emit_json(out, io::to_json(report));
        } else {
            out << "samples: " << report.samples << " (draws " << report.draws << ")\nmin C1: " << report.min_c1
                << "\nmin C2: " << report.min_c2 << "\ncounterexamples: " << report.counterexamples.size() << '\n';
        }
        if (!report.passed()) status = kRejected;
    });

    // quantum
    auto* quantum_cmd = app.add_subcommand("quantum", "see-saw optimization over two-qubit states");
    quantum_cmd->require_subcommand(1);
    FunctionalArgs q_f;
    quantum::SeesawOptions q_opts;
    double theta = 0.7853981633974483;
    int grid = 100;
    auto add_quantum_options = [&](CLI::App* cmd) {
        q_f.add_to(cmd, "--ineq");
        cmd->add_option("--restarts", q_opts.restarts, "random restarts");
        cmd->add_option("--max-iterations", q_opts.max_iterations, "iteration cap per restart");
        cmd->add_option("--tolerance", q_opts.tolerance, "convergence threshold on the objective");
        cmd->add_flag("--real-plane", q_opts.real_plane, "restrict Bloch vectors to the x-z plane");
    };
    auto* seesaw_cmd = quantum_cmd->add_subcommand("seesaw", "maximize at one Schmidt angle");
    add_quantum_options(seesaw_cmd);
    seesaw_cmd->add_option("--theta", theta, "Schmidt angle in [0, pi/4]");
    seesaw_cmd->callback([&] {
        q_opts.seed = common.seed;
        const auto r = quantum::seesaw_maximize(q_f.resolve(), quantum::TwoQubitState::schmidt(theta), q_opts);
        if (common.format == "json") {
            emit_json(out, io::to_json(r));
        } else {
            out << "value: " << io::format_double(r.value) << "\nconverged: " << (r.converged ? "yes" : "no")
                << "\nrestarts: " << r.restarts << '\n';
        }
    });
    auto* sweep_cmd = quantum_cmd->add_subcommand("sweep", "maximize over a grid of Schmidt angles");
    add_quantum_options(sweep_cmd);
    sweep_cmd->add_option("--grid", grid, "grid points on [0, pi/4]");
    sweep_cmd->callback([&] {
        q_opts.seed = common.seed;
        const auto r = quantum::theta_sweep(q_f.resolve(), grid, q_opts);
        if (common.format == "json") {
            emit_json(out, io::to_json(r));
            return;
        }
        out << "theta,value\n";
        for (const auto& p : r.curve) out << io::format_double(p.theta) << ',' << io::format_double(p.value) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}

}  // namespace nlbell::cli
