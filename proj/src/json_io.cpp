#include "nlbell/json_io.hpp"

#include <cstdio>

namespace nlbell::io {

namespace {

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

int settings_of(const Json& doc) {
    const auto& n = field(doc, "n");
    if (!n.is_number_integer()) throw FormatError("field 'n' must be an integer");
    return n.get<int>();
}

Rational parse_exact(const Json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw FormatError("exact values must be \"p/q\" strings or integers");
}

template <typename T, typename Parse>
BasicBehavior<T> behavior_from(const Json& doc, Parse parse) {
    const Scenario s(settings_of(doc));
    const auto n = static_cast<std::size_t>(s.settings());
    const auto& alice = field(doc, "alice");
    const auto& bob = field(doc, "bob");
    const auto& joint = field(doc, "joint");
    if (!alice.is_array() || !bob.is_array() || !joint.is_array() || alice.size() != n || bob.size() != n ||
        joint.size() != n) {
        throw FormatError("document does not match n = " + std::to_string(n));
    }
    BasicBehavior<T> p(s);
    for (std::size_t k = 0; k < n; ++k) {
        p.alice[k] = parse(alice[k]);
        p.bob[k] = parse(bob[k]);
        if (!joint[k].is_array() || joint[k].size() != n) throw FormatError("joint table is not N x N");
        for (std::size_t l = 0; l < n; ++l) p.joint(static_cast<int>(k), static_cast<int>(l)) = parse(joint[k][l]);
    }
    return p;
}

template <typename T, typename Emit>
Json behavior_to(const BasicBehavior<T>& p, const char* backend, Emit emit) {
    Json doc;
    doc["backend"] = backend;
    doc["n"] = p.settings();
    Json alice = Json::array(), bob = Json::array(), joint = Json::array();
    for (const auto& v : p.alice) alice.push_back(emit(v));
    for (const auto& v : p.bob) bob.push_back(emit(v));
    for (int i = 0; i < p.settings(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.settings(); ++j) row.push_back(emit(p.joint(i, j)));
        joint.push_back(std::move(row));
    }
    doc["alice"] = std::move(alice);
    doc["bob"] = std::move(bob);
    doc["joint"] = std::move(joint);
    return doc;
}

/// Floats are emitted at 9 significant digits so output is stable across runs.
double rounded(double v) { return std::stod(format_double(v)); }

Json vec3(const quantum::Vec3& v) { return Json::array({rounded(v[0]), rounded(v[1]), rounded(v[2])}); }

}  // namespace

Json to_json(const BehaviorPoint& p) {
    return behavior_to(p, "exact", [](const Rational& r) { return Json(r.to_string()); });
}

Json to_json(const FloatBehavior& p) {
    return behavior_to(p, "float", [](double v) { return Json(rounded(v)); });
}

std::string behavior_backend(const Json& doc) {
    if (!doc.is_object() || !doc.contains("backend")) return "exact";
    const auto backend = doc.at("backend").get<std::string>();
    if (backend != "exact" && backend != "float") throw FormatError("unknown backend '" + backend + "'");
    return backend;
}

BehaviorPoint exact_behavior_from_json(const Json& doc) {
    if (behavior_backend(doc) != "exact") throw FormatError("expected an exact behavior document");
    return behavior_from<Rational>(doc, parse_exact);
}

FloatBehavior float_behavior_from_json(const Json& doc) {
    if (behavior_backend(doc) != "float") throw FormatError("expected a float behavior document");
    return behavior_from<double>(doc, [](const Json& v) {
        if (!v.is_number()) throw FormatError("float behavior entries must be numbers");
        return v.get<double>();
    });
}

Json to_json(const BellFunctional& f) {
    Json doc;
    doc["n"] = f.settings();
    doc["alice"] = f.alice;
    doc["bob"] = f.bob;
    Json joint = Json::array();
    for (int i = 0; i < f.settings(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < f.settings(); ++j) row.push_back(f.joint(i, j));
        joint.push_back(std::move(row));
    }
    doc["joint"] = std::move(joint);
    doc["constant"] = f.constant;
    return doc;
}

BellFunctional functional_from_json(const Json& doc) {
    auto as_int = [](const Json& v) {
        if (!v.is_number_integer()) throw FormatError("functional coefficients must be integers");
        return v.get<std::int64_t>();
    };
    const auto p = behavior_from<std::int64_t>(doc, as_int);
    BellFunctional f{p.scenario};
    f.alice = p.alice;
    f.bob = p.bob;
    f.joint = p.joint;
    if (doc.contains("constant")) f.constant = as_int(doc.at("constant"));
    return f;
}

Json to_json(const MachineSpec& m) {
    Json doc;
    doc["n_inputs"] = m.inputs();
    Json pairs = Json::array();
    for (const auto& [x, y] : m.anticorrelated()) pairs.push_back(Json::array({x, y}));
    doc["anticorrelated"] = std::move(pairs);
    return doc;
}

MachineSpec machine_from_json(const Json& doc) {
    const int n = field(doc, "n_inputs").get<int>();
    std::set<InputPair> anti;
    for (const auto& pair : field(doc, "anticorrelated")) {
        if (!pair.is_array() || pair.size() != 2) throw FormatError("anticorrelated entries must be [x, y] pairs");
        anti.insert({pair[0].get<int>(), pair[1].get<int>()});
    }
    return MachineSpec(n, std::move(anti));
}

Json to_json(const WiringTable& w) {
    Json doc;
    doc["alice"] = w.alice;
    doc["bob"] = w.bob;
    return doc;
}

WiringTable wiring_from_json(const Json& doc) {
    return {field(doc, "alice").get<BitMatrix>(), field(doc, "bob").get<BitMatrix>()};
}

Json to_json(const WiringStrategy& s) {
    Json doc;
    doc["machine"] = s.machine ? to_json(*s.machine) : Json(nullptr);
    Json alice = Json::array(), bob = Json::array();
    for (const auto& c : s.alice) alice.push_back(c.name());
    for (const auto& c : s.bob) bob.push_back(c.name());
    doc["alice"] = std::move(alice);
    doc["bob"] = std::move(bob);
    return doc;
}

WiringStrategy strategy_from_json(const Json& doc) {
    WiringStrategy s;
    const auto& m = field(doc, "machine");
    if (!m.is_null()) s.machine = machine_from_json(m);
    for (const auto& c : field(doc, "alice")) s.alice.push_back(SettingChoice::parse(c.get<std::string>()));
    for (const auto& c : field(doc, "bob")) s.bob.push_back(SettingChoice::parse(c.get<std::string>()));
    return s;
}

Json to_json(const FacetCertificate& c) {
    Json doc;
    doc["functional"] = to_json(c.functional);
    doc["class"] = c.strategy_class.label();
    if (c.strategy_class.machine) doc["machine"] = to_json(*c.strategy_class.machine);
    doc["max_value"] = c.max_value.to_string();
    doc["dimension"] = c.dimension;
    doc["affine_rank"] = c.affine_rank;
    doc["saturating_strategies"] = c.saturating_strategies;
    doc["distinct_saturating_points"] = c.saturating_points.size();
    doc["deterministic_saturating"] = c.deterministic_saturating;
    doc["machine_saturating"] = c.machine_saturating;
    doc["saturating_truncated"] = c.saturating_truncated;
    doc["accepted"] = c.accepted();
    if (c.witness) doc["witness"] = to_json(*c.witness);
    return doc;
}

Json census_to_json(const std::vector<ClassCensus>& census) {
    Json doc;
    std::size_t total = 0;
    Json classes = Json::object();
    for (const auto& c : census) {
        total += c.count;
        Json entry;
        entry["count"] = c.count;
        entry["chsh"] = c.chsh_violations;
        entry["i3322"] = c.i3322_violations;
        classes[to_string(c.label)] = std::move(entry);
    }
    doc["total"] = total;
    doc["classes"] = std::move(classes);
    return doc;
}

Json to_json(const Lemma1Report& r) {
    Json doc;
    doc["n"] = r.settings;
    doc["seed"] = r.seed;
    doc["samples"] = r.samples;
    doc["draws"] = r.draws;
    doc["min_c1"] = r.min_c1.to_string();
    doc["min_c2"] = r.min_c2.to_string();
    doc["counterexamples"] = r.counterexamples.size();
    doc["passed"] = r.passed();
    return doc;
}

Json to_json(const quantum::MeasurementSet& m) {
    Json doc;
    Json alice = Json::array(), bob = Json::array();
    for (const auto& v : m.alice) alice.push_back(vec3(v));
    for (const auto& v : m.bob) bob.push_back(vec3(v));
    doc["alice"] = std::move(alice);
    doc["bob"] = std::move(bob);
    return doc;
}

Json to_json(const quantum::SeesawResult& r) {
    Json doc;
    doc["value"] = rounded(r.value);
    doc["converged"] = r.converged;
    doc["iterations"] = r.iterations;
    doc["restarts"] = r.restarts;
    doc["measurements"] = to_json(r.measurements);
    return doc;
}

Json to_json(const quantum::SweepResult& r) {
    Json doc;
    Json curve = Json::array();
    for (const auto& p : r.curve) curve.push_back(Json{{"theta", rounded(p.theta)}, {"value", rounded(p.value)}});
    doc["curve"] = std::move(curve);
    if (!r.curve.empty()) {
        doc["argmax"] = Json{{"theta", rounded(r.curve[r.argmax].theta)}, {"value", rounded(r.curve[r.argmax].value)}};
    }
    return doc;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace nlbell::io
