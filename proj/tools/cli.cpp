#include "cli.hpp"

#include "branchlab/branchlab.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

namespace branchlab::cli {
namespace {

struct Options {
    std::string algebra;
    std::string subalgebra;
    std::string config;
    std::string weight;
    std::string method = "all";
    std::string format = "json";
    bool no_timings = false;
    unsigned threads = 1;
    int max_label = 2;
    int max_rank = 4;
    int repeat = 1;
};

struct Context {
    RootSystem parent;
    EmbeddedSubsystem sub;
    std::optional<SplintDescriptor> sd;
    std::string sub_name;
};

std::vector<long long> parse_labels(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("weight labels must be integers, got '" + item + "'");
        }
        if (used != item.size() || v < 0) throw ConfigError("weight labels must be nonnegative integers, got '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty weight");
    return out;
}

Weight parse_weight(const Options& o, const RootSystem& rs, std::vector<long long>* labels_out = nullptr) {
    if (o.weight.empty()) throw ConfigError("--weight is required");
    auto labels = parse_labels(o.weight);
    if (labels.size() != rs.rank())
        throw ConfigError("weight has " + std::to_string(labels.size()) + " labels, " + rs.label() + " has rank " +
                          std::to_string(rs.rank()));
    if (labels_out) *labels_out = labels;
    return rs.from_dynkin(labels);
}

RootSystem parse_algebra(const Options& o) {
    if (o.algebra.empty()) throw ConfigError("--algebra is required");
    return build_root_system(o.algebra);
}

Context resolve(const Options& o) {
    Context ctx;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw ConfigError("cannot read config file '" + o.config + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        auto [parent, spec] = subsystem_from_json(j);
        if (!o.algebra.empty() && build_root_system(o.algebra).label() != parent.label())
            throw ConfigError("--algebra " + o.algebra + " does not match config algebra " + parent.label());
        ctx.sub = regular_subsystem(parent, spec);
        ctx.parent = std::move(parent);
        ctx.sub_name = ctx.sub.label;
        return ctx;
    }
    if (o.subalgebra.empty()) throw ConfigError("--subalgebra or --config is required");
    if (o.algebra.empty()) throw ConfigError("--algebra is required");
    try {
        ctx.sd = splint_catalog(o.algebra, o.subalgebra);
    } catch (const NotASplint& e) {
        throw ConfigError(std::string(e.what()) + "; pass other subalgebras with --config");
    }
    ctx.parent = ctx.sd->parent;
    ctx.sub = ctx.sd->stem_a;
    ctx.sub_name = ctx.sub.label;
    return ctx;
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
}

// Text grid of a rank-2 weight diagram: one row per value of the vertical
// coordinate, one column per value of the horizontal one.
std::string render_diagram(const RootSystem& rs, const std::vector<std::pair<Weight, std::string>>& cells) {
    if (rs.rank() != 2) throw ConfigError("diagram format needs a rank-2 algebra, " + rs.label() + " has rank " +
                                          std::to_string(rs.rank()));
    // x runs along the shortest simple root, y along the part of rho orthogonal to it
    Weight u = rs.simple_roots()[0];
    for (const auto& a : rs.simple_roots())
        if (dot(a, a) < dot(u, u)) u = a;
    Weight v = rs.rho();
    v.add_scaled(-dot(v, u) / dot(u, u), u);

    std::set<Rational, std::greater<>> ys;
    std::set<Rational> xs;
    std::map<std::pair<Rational, Rational>, std::string> grid;
    std::size_t width = 1;
    for (const auto& [w, text] : cells) {
        const Rational y = dot(w, v), x = dot(w, u);
        ys.insert(y);
        xs.insert(x);
        grid[{y, x}] = text;
        width = std::max(width, text.size());
    }
    std::ostringstream out;
    for (const auto& y : ys) {
        std::string line;
        for (const auto& x : xs) {
            auto it = grid.find({y, x});
            const std::string text = it == grid.end() ? "." : it->second;
            line += std::string(width + 1 - text.size(), ' ') + text;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string branching_tsv(const BranchingResult& r) {
    std::ostringstream out;
    out << "weight_dynkin\tu1_charges\tcoeff\n";
    for (const auto& row : r.rows) out << join(row.dynkin) << '\t' << join(row.charges) << '\t' << row.coeff << '\n';
    return out.str();
}

std::string branching_diagram(const RootSystem& parent, const BranchingResult& r) {
    std::vector<std::pair<Weight, std::string>> cells;
    for (const auto& row : r.rows) cells.emplace_back(row.weight, std::to_string(row.coeff));
    return render_diagram(parent, cells);
}

// ---------------------------------------------------------------- commands

struct Output {
    std::string text;
    int status = Ok;
    std::string tag;  // file stem for BRANCHLAB_OUT_DIR
    std::string ext = "json";
};

Output cmd_roots(const Options& o) {
    const RootSystem rs = parse_algebra(o);
    Output res;
    res.tag = "roots_" + rs.label();
    if (o.format == "json") {
        Json simple = Json::array(), fund = Json::array(), pos = Json::array();
        for (const auto& a : rs.simple_roots()) simple.push_back(weight_to_json(a));
        for (const auto& w : rs.fundamental_weights()) fund.push_back(weight_to_json(w));
        for (const auto& a : rs.positive_roots()) pos.push_back(weight_to_json(a));
        Json j = {{"algebra", rs.label()},
                  {"rank", rs.rank()},
                  {"ambient_dim", rs.ambient_dim()},
                  {"weyl_order", rs.weyl_order()},
                  {"cartan", rs.cartan_matrix()},
                  {"simple_roots", std::move(simple)},
                  {"fundamental_weights", std::move(fund)},
                  {"rho", weight_to_json(rs.rho())},
                  {"positive_roots", std::move(pos)}};
        res.text = j.dump(2) + "\n";
    } else if (o.format == "tsv") {
        std::ostringstream out;
        out << "root\tsimple_coefficients\theight\n";
        for (const auto& a : rs.positive_roots())
            out << to_string(a) << '\t' << join(rs.simple_root_coefficients(a)) << '\t' << to_string(rs.height(a))
                << '\n';
        res.text = out.str();
        res.ext = "tsv";
    } else {
        std::vector<std::pair<Weight, std::string>> cells{{Weight(rs.ambient_dim()), "0"}};
        for (const auto& a : rs.roots()) cells.emplace_back(a, rs.is_positive_root(a) ? "+" : "-");
        res.text = render_diagram(rs, cells);
        res.ext = "txt";
    }
    return res;
}

Output cmd_character(const Options& o) {
    const RootSystem rs = parse_algebra(o);
    std::vector<long long> labels;
    const Weight mu = parse_weight(o, rs, &labels);
    const FormalSum ch = freudenthal_character(rs, mu);
    Output res;
    res.tag = "character_" + rs.label() + "_" + join(labels);
    if (o.format == "json") {
        Json j = {{"algebra", rs.label()}, {"dynkin", labels}, {"dimension", ch.total()}};
        j["terms"] = to_json(ch, rs)["terms"];
        res.text = j.dump(2) + "\n";
    } else if (o.format == "tsv") {
        std::ostringstream out;
        out << "weight\tdynkin\tmult\n";
        for (const auto& [w, m] : canonical_terms(ch, rs))
            out << to_string(w) << '\t' << join(rs.dynkin_labels(w)) << '\t' << m << '\n';
        res.text = out.str();
        res.ext = "tsv";
    } else {
        std::vector<std::pair<Weight, std::string>> cells;
        for (const auto& [w, m] : ch.terms()) cells.emplace_back(w, std::to_string(m));
        res.text = render_diagram(rs, cells);
        res.ext = "txt";
    }
    return res;
}

Output cmd_fan(const Options& o) {
    const Context ctx = resolve(o);
    const Fan fan = compute_fan(ctx.parent, ctx.sub.roots);
    Output res;
    res.tag = "fan_" + ctx.parent.label() + "_" + ctx.sub_name;
    if (o.format == "json") {
        Json j = {{"algebra", ctx.parent.label()}, {"subalgebra", ctx.sub_name}};
        const Json body = to_json(fan, ctx.parent);
        for (const auto& [k, v] : body.items()) j[k] = v;
        res.text = j.dump(2) + "\n";
    } else if (o.format == "tsv") {
        std::ostringstream out;
        out << "gamma\ts\n";
        std::vector<std::pair<Weight, long long>> items(fan.carrier.begin(), fan.carrier.end());
        CanonicalOrder order{&ctx.parent};
        std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) { return order(b.first, a.first); });
        for (const auto& [g, s] : items) out << to_string(g) << '\t' << s << '\n';
        res.text = out.str();
        res.ext = "tsv";
    } else {
        std::vector<std::pair<Weight, std::string>> cells;
        for (const auto& [g, s] : fan.carrier) cells.emplace_back(g, std::to_string(s));
        res.text = render_diagram(ctx.parent, cells);
        res.ext = "txt";
    }
    return res;
}

Output compare_output(const Options& o, const Context& ctx, const Weight& mu) {
    const CompareReport report = compare_methods(ctx.parent, ctx.sub, mu, ctx.sd);
    Output res;
    res.tag = "compare_" + report.case_name;
    res.status = report.agree ? Ok : Disagree;
    if (o.format == "json") {
        res.text = to_json(report, !o.no_timings).dump(2) + "\n";
    } else if (o.format == "tsv") {
        std::ostringstream out;
        out << "weight_dynkin\tu1_charges";
        for (const auto& oc : report.outcomes)
            if (oc.result) out << '\t' << to_string(oc.method);
        out << '\n';
        for (const auto& d : report.table) {
            out << join(d.dynkin) << '\t' << join(d.charges);
            for (const auto& [m, c] : d.coeffs) out << '\t' << c;
            out << '\n';
        }
        out << "# agree=" << (report.agree ? "true" : "false") << '\n';
        res.text = out.str();
        res.ext = "tsv";
    } else {
        const auto* first = &report.outcomes.front();
        for (const auto& oc : report.outcomes)
            if (oc.result) {
                first = &oc;
                break;
            }
        if (!first->result) throw InvariantViolation("no method produced a result");
        res.text = branching_diagram(ctx.parent, *first->result);
        res.text += std::string("agree=") + (report.agree ? "true" : "false") + "\n";
        res.ext = "txt";
    }
    return res;
}

Output cmd_branch(const Options& o) {
    const Context ctx = resolve(o);
    const Weight mu = parse_weight(o, ctx.parent);
    if (o.method == "all") return compare_output(o, ctx, mu);

    BranchingResult r;
    if (o.method == "splint") {
        if (!ctx.sd) throw ConfigError("the splint method needs a catalog subalgebra (--subalgebra)");
        r = splint_branching(mu, *ctx.sd);
    } else if (o.method == "fan") {
        r = fan_branching(ctx.parent, ctx.sub, mu);
    } else {
        r = oracle_branching(ctx.parent, mu, ctx.sub);
    }
    Output res;
    res.tag = "branch_" + o.method + "_" + case_name(ctx.parent.label(), ctx.sub_name, r.parent_dynkin);
    if (o.format == "json") {
        res.text = to_json(r).dump(2) + "\n";
    } else if (o.format == "tsv") {
        res.text = branching_tsv(r);
        res.ext = "tsv";
    } else {
        res.text = branching_diagram(ctx.parent, r);
        res.ext = "txt";
    }
    return res;
}

Output cmd_compare(const Options& o) {
    const Context ctx = resolve(o);
    return compare_output(o, ctx, parse_weight(o, ctx.parent));
}

Json splint_check_row(const SplintDescriptor& sd) {
    Json j = to_json(sd);
    j["valid"] = true;
    try {
        validate_descriptor(sd);
    } catch (const InvariantViolation& e) {
        j["valid"] = false;
        j["invalid_reason"] = e.what();
    }
    j["chamber_condition"] = chamber_condition(sd);
    Json witnesses = Json::array();
    try {
        for (const auto& w : stem_pairing_witnesses(sd))
            witnesses.push_back({{"coimage_index", w.coimage_index},
                                 {"beta", weight_to_json(w.beta)},
                                 {"alpha", weight_to_json(w.alpha)},
                                 {"beta_prime", weight_to_json(w.beta_prime)}});
        j["witnesses"] = std::move(witnesses);
        j["witness_label_map"] = witness_label_map(sd);
    } catch (const InvariantViolation& e) {
        j["witnesses"] = nullptr;
        j["witness_error"] = e.what();
    }
    const auto found = detect_injective_splint(sd.parent, sd.stem_a);
    j["detected"] = found.has_value();
    if (found) j["detected_coimage"] = found->coimage.label();
    return j;
}

Output cmd_splint_check(const Options& o) {
    std::vector<std::pair<std::string, std::string>> cases;
    if (!o.subalgebra.empty()) {
        if (o.algebra.empty()) throw ConfigError("--algebra is required with --subalgebra");
        cases.emplace_back(o.algebra, o.subalgebra);
    } else {
        const std::string filter = o.algebra.empty() ? "" : build_root_system(o.algebra).label();
        for (const auto& row : catalog_rows(o.max_rank))
            if (filter.empty() || row.parent == filter) cases.emplace_back(row.parent, row.sub);
        if (cases.empty()) throw ConfigError("no catalog rows for '" + o.algebra + "'");
    }
    Json rows = Json::array();
    for (const auto& [p, s] : cases) {
        try {
            rows.push_back(splint_check_row(splint_catalog(p, s)));
        } catch (const NotASplint& e) {
            throw ConfigError(e.what());
        }
    }
    Output res;
    res.tag = "splint-check" + (cases.size() == 1 ? "_" + cases[0].first + "_" + cases[0].second : "");
    if (o.format == "tsv") {
        std::ostringstream out;
        out << "parent\tstem_a\tcoimage\ttype\tmetric_a\tmetric_s\tvalid\tchamber\twitnesses\tdetected\n";
        for (const auto& r : rows)
            out << r["parent"].get<std::string>() << '\t' << r["stem_a"].get<std::string>() << '\t'
                << r["coimage"].get<std::string>() << '\t' << r["type"].get<std::string>() << '\t' << r["metric"]["a"]
                << '\t' << r["metric"]["s"] << '\t' << r["valid"] << '\t' << r["chamber_condition"] << '\t'
                << (r["witnesses"].is_null() ? std::string("none") : std::to_string(r["witnesses"].size())) << '\t'
                << r["detected"] << '\n';
        res.text = out.str();
        res.ext = "tsv";
    } else if (o.format == "json") {
        res.text = (cases.size() == 1 ? rows[0] : Json{{"rows", rows}}).dump(2) + "\n";
    } else {
        throw ConfigError("splint-check supports json and tsv");
    }
    return res;
}

struct BenchLine {
    std::string case_name;
    std::string method;
    double ms = -1;
    std::string rows;
    std::string dim_check;
};

std::vector<std::vector<long long>> weight_grid(std::size_t rank, int max_label) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(rank, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        while (i < rank && cur[i] == max_label) cur[i++] = 0;
        if (i == rank) break;
        ++cur[i];
    }
    return out;
}

Output cmd_bench(const Options& o) {
    const Context ctx = resolve(o);
    std::vector<std::vector<long long>> weights;
    if (!o.weight.empty()) {
        std::vector<long long> labels;
        parse_weight(o, ctx.parent, &labels);
        weights.push_back(labels);
    } else {
        if (o.max_label < 0) throw ConfigError("--max-label must be nonnegative");
        weights = weight_grid(ctx.parent.rank(), o.max_label);
    }
    if (o.repeat < 1) throw ConfigError("--repeat must be positive");

    std::vector<std::vector<BenchLine>> lines(weights.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < weights.size(); i = next++) {
            try {
                const Weight mu = ctx.parent.from_dynkin(weights[i]);
                std::map<Method, BenchLine> best;
                for (int rep = 0; rep < o.repeat; ++rep) {
                    const CompareReport report = compare_methods(ctx.parent, ctx.sub, mu, ctx.sd);
                    for (const auto& oc : report.outcomes) {
                        BenchLine line{report.case_name, to_string(oc.method), oc.ran ? oc.millis : -1,
                                       oc.result ? std::to_string(oc.result->rows.size()) : "-",
                                       oc.result ? (oc.dimension_ok ? "ok" : "FAIL") : "skipped"};
                        auto [it, inserted] = best.emplace(oc.method, line);
                        if (!inserted && line.ms >= 0 && line.ms < it->second.ms) it->second.ms = line.ms;
                    }
                }
                for (auto& [m, line] : best) lines[i].push_back(std::move(line));
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                failed = true;
                failure = e.what();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(weights.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed) throw InvariantViolation("bench failed: " + failure);

    std::ostringstream out;
    out << "case\tmethod\tms\trows\tdim_check\n";
    bool all_ok = true;
    for (const auto& group : lines)
        for (const auto& l : group) {
            out << l.case_name << '\t' << l.method << '\t';
            if (l.ms < 0 || o.no_timings) out << '-';
            else out << std::fixed << std::setprecision(3) << l.ms;
            out << '\t' << l.rows << '\t' << l.dim_check << '\n';
            all_ok = all_ok && l.dim_check != "FAIL";
        }
    Output res;
    res.text = out.str();
    res.ext = "tsv";
    res.tag = "bench_" + ctx.parent.label() + "_" + ctx.sub_name;
    res.status = all_ok ? Ok : Disagree;
    return res;
}

std::string file_safe(std::string s) {
    for (auto& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '+') c = '_';
    return s;
}

void write_out_dir(const Output& res, std::ostream& err) {
    const char* dir = std::getenv("BRANCHLAB_OUT_DIR");
    if (!dir || !*dir) return;
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / (file_safe(res.tag) + "." + res.ext);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "warning: cannot write " << path.string() << '\n';
        return;
    }
    f << res.text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Branching coefficients of regular subalgebras by splint, fan recurrence and character oracle",
                 "branchlab"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "branchlab 1.0");

    const std::vector<std::string> formats{"json", "tsv", "diagram"};
    auto add_algebra = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--algebra,-a", o.algebra, "Parent algebra, e.g. B2, G2, F4");
        if (required) opt->required();
    };
    auto add_sub = [&](CLI::App* c) {
        c->add_option("--subalgebra,-s", o.subalgebra, "Catalog subalgebra, e.g. A1+u1, A2, D3");
        c->add_option("--config", o.config, "JSON subsystem spec (fan and oracle methods)");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format,-f", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* roots = app.add_subcommand("roots", "Root system data");
    add_algebra(roots, true);
    add_format(roots);

    auto* character = app.add_subcommand("character", "Weight multiplicities of an irreducible module");
    add_algebra(character, true);
    character->add_option("--weight,-w", o.weight, "Dynkin labels, e.g. 3,2")->required();
    add_format(character);

    auto* fan = app.add_subcommand("fan", "Injection fan of a subalgebra");
    add_algebra(fan, false);
    add_sub(fan);
    add_format(fan);

    auto* branch = app.add_subcommand("branch", "Branching coefficients");
    add_algebra(branch, false);
    add_sub(branch);
    branch->add_option("--weight,-w", o.weight, "Dynkin labels, e.g. 3,2")->required();
    branch->add_option("--method,-m", o.method, "splint, fan, oracle or all")
        ->check(CLI::IsMember({"splint", "fan", "oracle", "all"}));
    add_format(branch);
    branch->add_flag("--no-timings", o.no_timings, "Omit wall-clock timings (method all)");

    auto* check = app.add_subcommand("splint-check", "Validate catalog splints");
    add_algebra(check, false);
    check->add_option("--subalgebra,-s", o.subalgebra, "Catalog subalgebra; all rows if omitted");
    check->add_option("--max-rank", o.max_rank, "Largest parent rank when listing rows");
    check->add_option("--format,-f", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    auto* compare = app.add_subcommand("compare", "Run all three methods and diff");
    add_algebra(compare, false);
    add_sub(compare);
    compare->add_option("--weight,-w", o.weight, "Dynkin labels, e.g. 3,2")->required();
    add_format(compare);
    compare->add_flag("--no-timings", o.no_timings, "Omit wall-clock timings");

    auto* bench = app.add_subcommand("bench", "Time the methods over a weight grid (TSV)");
    add_algebra(bench, false);
    add_sub(bench);
    bench->add_option("--weight,-w", o.weight, "Single weight instead of a grid");
    bench->add_option("--max-label", o.max_label, "Grid of all weights with labels <= N");
    bench->add_option("--threads,-j", o.threads, "Worker threads");
    bench->add_option("--repeat", o.repeat, "Repetitions per case; the fastest is reported");
    bench->add_flag("--no-timings", o.no_timings, "Print '-' instead of timings");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::CallForVersion&) {
        out << "branchlab 1.0\n";
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadConfig;
    }

    try {
        Output res;
        if (*roots) res = cmd_roots(o);
        else if (*character) res = cmd_character(o);
        else if (*fan) res = cmd_fan(o);
        else if (*branch) res = cmd_branch(o);
        else if (*check) res = cmd_splint_check(o);
        else if (*compare) res = cmd_compare(o);
        else res = cmd_bench(o);
        out << res.text;
        write_out_dir(res, err);
        if (res.status == Disagree) err << "error: methods disagree\n";
        return res.status;
    } catch (const UnsupportedSplint& e) {
        err << "error: unsupported splint: " << e.what() << '\n';
        return Unsupported;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return BadConfig;
    } catch (const InvalidSubsystem& e) {
        err << "error: invalid subsystem: " << e.what() << '\n';
        return BadConfig;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return BadConfig;
    } catch (const UnsupportedCase& e) {
        err << "error: " << e.what() << '\n';
        return BadConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
}

} // namespace branchlab::cli
