#include "branchlab/serialize.hpp"
#include "branchlab/error.hpp"
#include "linalg.hpp"

namespace branchlab {

Json weight_to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords()) out.push_back(to_string(c));
    return out;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("weight must be an array of \"p/q\" strings");
    std::vector<Rational> coords;
    for (const auto& c : j) {
        if (c.is_string()) coords.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer()) coords.emplace_back(c.get<long long>());
        else throw ConfigError("weight coordinate must be a \"p/q\" string");
    }
    return Weight(std::move(coords));
}

Json to_json(const FormalSum& f, const RootSystem& rs) {
    Json terms = Json::array();
    for (const auto& [w, c] : canonical_terms(f, rs)) terms.push_back({{"weight", weight_to_json(w)}, {"coeff", c}});
    return {{"terms", std::move(terms)}};
}

FormalSum formal_sum_from_json(const Json& j) {
    FormalSum out;
    for (const auto& t : j.at("terms")) out.add(weight_from_json(t.at("weight")), t.at("coeff").get<long long>());
    return out;
}

Json to_json(const BranchingResult& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json charges = Json::array();
        for (const auto& q : row.charges) charges.push_back(to_string(q));
        rows.push_back({{"weight_dynkin", row.dynkin}, {"u1_charges", std::move(charges)}, {"coeff", row.coeff}});
    }
    return {{"parent", {{"algebra", r.parent_label}, {"dynkin", r.parent_dynkin}}},
            {"subalgebra", r.sub_label},
            {"method", to_string(r.method)},
            {"rows", std::move(rows)}};
}

BranchingResult branching_result_from_json(const Json& j, const RootSystem& parent, const EmbeddedSubsystem& sub) {
    // The a-coroots together with the charge directions form a basis of the
    // weight space; solve for the weight with the given pairings.
    std::vector<Weight> basis = sub.roots.coroots();
    for (const auto& q : sub.u1_charges) basis.push_back(q);
    if (basis.size() != parent.rank()) throw UnsupportedCase("subalgebra is not rank-preserving");
    detail::Matrix gram(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) gram[a][b] = dot(basis[a], basis[b]);
    const auto inv = detail::invert(gram);

    const Method method = [&] {
        const auto m = j.at("method").get<std::string>();
        if (m == "splint") return Method::Splint;
        if (m == "fan") return Method::Fan;
        if (m == "oracle") return Method::Oracle;
        throw ConfigError("unknown method '" + m + "'");
    }();

    std::map<Weight, long long> coeffs;
    for (const auto& row : j.at("rows")) {
        std::vector<Rational> target;
        for (const auto& l : row.at("weight_dynkin")) target.emplace_back(l.get<long long>());
        for (const auto& q : row.at("u1_charges")) target.push_back(parse_rational(q.get<std::string>()));
        if (target.size() != basis.size()) throw ConfigError("row has the wrong number of labels");
        Weight w(parent.ambient_dim());
        for (std::size_t a = 0; a < basis.size(); ++a) {
            Rational x(0);
            for (std::size_t b = 0; b < basis.size(); ++b) x += inv[a][b] * target[b];
            w.add_scaled(x, basis[a]);
        }
        coeffs[w] = row.at("coeff").get<long long>();
    }
    std::vector<long long> dynkin = j.at("parent").at("dynkin").get<std::vector<long long>>();
    return make_branching_result(parent, sub, parent.from_dynkin(dynkin), method, coeffs);
}

Json to_json(const Fan& fan, const RootSystem& rs) {
    Json carrier = Json::array();
    std::vector<std::pair<Weight, long long>> items(fan.carrier.begin(), fan.carrier.end());
    CanonicalOrder order{&rs};
    std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) { return order(b.first, a.first); });
    for (const auto& [g, s] : items) carrier.push_back({{"gamma", weight_to_json(g)}, {"s", s}});
    Json gammas = Json::array();
    for (const auto& g : fan.gamma_set) gammas.push_back(weight_to_json(g));
    return {{"carrier", std::move(carrier)}, {"gamma0", weight_to_json(fan.gamma0)}, {"gamma_set", std::move(gammas)}};
}

Json to_json(const SplintDescriptor& sd) {
    Json phi = Json::array();
    for (const auto& [x, y] : sd.phi_pairs())
        phi.push_back({{"coimage_root", weight_to_json(x)}, {"image_root", weight_to_json(y)}});
    Json simple = Json::array();
    for (const auto& y : sd.phi_simple) simple.push_back(weight_to_json(y));
    return {{"parent", sd.parent.label()},
            {"stem_a", sd.stem_a.label},
            {"coimage", sd.coimage.label()},
            {"type", to_string(sd.type)},
            {"metric", {{"a", sd.a_metric}, {"s", sd.s_metric}}},
            {"label_map", sd.label_map},
            {"phi_simple", std::move(simple)},
            {"phi", std::move(phi)}};
}

Json to_json(const CompareReport& report, bool include_timings) {
    Json timings = Json::object();
    Json methods = Json::object();
    for (const auto& o : report.outcomes) {
        const std::string name = to_string(o.method);
        if (include_timings) timings[name] = o.millis;
        Json entry = {{"status", o.ran ? "ok" : "refused"}};
        if (o.result) {
            entry["rows"] = o.result->rows.size();
            entry["dim_check"] = o.dimension_ok;
        } else {
            entry["error"] = o.error;
        }
        methods[name] = std::move(entry);
    }
    auto entries = [](const std::vector<DiffEntry>& list) {
        Json out = Json::array();
        for (const auto& d : list) {
            Json charges = Json::array();
            for (const auto& q : d.charges) charges.push_back(to_string(q));
            Json coeffs = Json::object();
            for (const auto& [m, c] : d.coeffs) coeffs[to_string(m)] = c;
            out.push_back({{"weight_dynkin", d.dynkin}, {"u1_charges", std::move(charges)}, {"coeffs", std::move(coeffs)}});
        }
        return out;
    };
    return {{"case", report.case_name},
            {"agree", report.agree},
            {"parent_dimension", report.parent_dimension},
            {"timings_ms", std::move(timings)},
            {"methods", std::move(methods)},
            {"rows", entries(report.table)},
            {"diff", entries(report.diff)}};
}

std::pair<RootSystem, SubsystemSpec> subsystem_from_json(const Json& j) {
    if (!j.contains("algebra")) throw ConfigError("subalgebra config needs \"algebra\"");
    RootSystem parent = build_root_system(j.at("algebra").get<std::string>());
    SubsystemSpec spec;
    if (j.contains("kept_simple")) spec.kept_simple = j.at("kept_simple").get<std::vector<std::size_t>>();
    if (j.contains("kept_roots"))
        for (const auto& r : j.at("kept_roots")) spec.kept_roots.push_back(weight_from_json(r));
    if (j.contains("u1_charges"))
        for (const auto& q : j.at("u1_charges")) spec.u1_charges.push_back(weight_from_json(q));
    return {std::move(parent), std::move(spec)};
}

} // namespace branchlab
