// Command-line driver. Exit codes: 0 = concluded (or subcommand succeeded),
// 2 = bounded search ended without a conclusion, 1 = usage or runtime error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "locinv/embed.hpp"
#include "locinv/experiments.hpp"
#include "locinv/instances.hpp"
#include "locinv/oracle.hpp"

namespace {

using namespace locinv;

struct Opts {
    std::string target_path;
    std::vector<std::string> sets;
    uint64_t bound = 64;
    std::string mode = "paper";
    bool no_early = false;
    std::string format = "text";
    std::string out_path;
    uint64_t samples = 100;
    uint64_t seed = 0;
    unsigned threads = 1;
    unsigned l = 0;
    unsigned k = 0;
};

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file " + path);
    return file;
}

InvertMode mode_of(const std::string& s) {
    return s == "progressive" ? InvertMode::progressive : InvertMode::paper;
}

nlohmann::json load_target(const Opts& o) {
    if (o.target_path.empty()) throw ParseError("--target is required");
    nlohmann::json spec = load_json_file(o.target_path);
    for (const std::string& kv : o.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("--set expects key=value");
        std::string key = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        if (val == "true")
            spec[key] = true;
        else if (val == "false")
            spec[key] = false;
        else
            spec[key] = val;
    }
    return spec;
}

nlohmann::json outcome_json(const TargetInstance& inst, const InversionOutcome& out,
                            const Opts& o, bool lc_mode) {
    nlohmann::json j;
    j["target"] = inst.kind;
    j["map"] = inst.map.name;
    j["bound_M"] = o.bound;
    j["mode"] = o.mode;
    j["outcome"] = out.outcome_name();
    j["eval_count"] = out.eval_count;
    j["false_positives"] = out.false_positives;
    if (const StateVec* x = out.solution()) {
        j["x"] = vec_to_hex(*x);
        j["x_dec"] = decode_value(*x).get_str();
    } else {
        j["x"] = nullptr;
    }
    if (const auto* s = std::get_if<Solved>(&out.result)) {
        j["lc"] = s->lc;
        if (lc_mode) {
            nlohmann::json alphas = nlohmann::json::array();
            for (const Fe& a : s->minpoly.alpha) alphas.push_back(inst.map.field.to_string(a));
            j["minpoly"] = {{"degree", s->minpoly.degree}, {"alpha", alphas}};
            auto ord = poly_order(s->minpoly, kOracleGuard);
            if (ord)
                j["order"] = *ord;
            else
                j["order"] = nullptr;
        }
    }
    if (const auto* e = std::get_if<EarlyPeriod>(&out.result)) j["period"] = e->period;
    if (out.projection) j["window"] = *out.projection;
    if (!out.notes.empty()) {
        nlohmann::json notes = nlohmann::json::array();
        for (const ProjectionNote& n : out.notes)
            notes.push_back({{"window", n.index},
                             {"outcome", n.outcome},
                             {"lc_or_period", n.lc_or_period},
                             {"cross_verified", n.cross_verified}});
        j["windows"] = std::move(notes);
    }
    if (!inst.extra.is_null()) j["instance"] = inst.extra;
    return j;
}

void print_kv_text(std::ostream& os, const nlohmann::json& j) {
    // Flat greppable "key value" lines; nested values print as compact JSON.
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << it.key() << ' ';
        if (it->is_string())
            os << it->get<std::string>();
        else
            os << it->dump();
        os << '\n';
    }
}

int cmd_invert(const Opts& o, bool lc_mode) {
    TargetInstance inst = load_instance(load_target(o));
    if (o.bound < 2) throw ValueOutOfRange("--M must be >= 2");
    InvertOptions opts;
    opts.mode = mode_of(o.mode);
    opts.early_shortcut = lc_mode ? false : !o.no_early;
    InversionOutcome out = inst.embedding
                               ? invert_embedding(inst.map, inst.y, o.bound, opts)
                               : invert_local(inst.map, inst.y, o.bound, opts);
    std::ofstream file;
    std::ostream& os = open_out(file, o.out_path);
    nlohmann::json j = outcome_json(inst, out, o, lc_mode);
    if (o.format == "json")
        os << j.dump(2) << '\n';
    else
        print_kv_text(os, j);
    return out.concluded() ? 0 : 2;
}

int cmd_orbit(const Opts& o) {
    TargetInstance inst = load_instance(load_target(o));
    if (!inst.map.square()) throw DimensionMismatch("orbit needs a square map");
    OrbitDecomposition d = orbit_decompose(inst.map);
    uint64_t yidx = decode_index(inst.y);
    std::map<uint64_t, uint64_t> period_hist;
    for (uint64_t p : d.periods) ++period_hist[p];
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [p, c] : period_hist) hist[std::to_string(p)] = c;
    nlohmann::json j;
    j["target"] = inst.kind;
    j["states"] = d.states;
    j["orbits"] = d.periods.size();
    j["goe_size"] = d.goe.size();
    j["period_histogram"] = std::move(hist);
    j["y_index"] = yidx;
    j["y_orbit"] = d.orbit_id[yidx];
    j["y_period"] = d.period_of(yidx);
    j["y_preperiod"] = d.preperiod[yidx];
    j["y_on_cycle"] = d.on_cycle(yidx);
    std::ofstream file;
    std::ostream& os = open_out(file, o.out_path);
    if (o.format == "json")
        os << j.dump(2) << '\n';
    else
        print_kv_text(os, j);
    return 0;
}

int cmd_bounds(const Opts& o) {
    std::ofstream file;
    std::ostream& os = open_out(file, o.out_path);
    if (o.l != 0 || o.k != 0) {
        if (o.l == 0 || o.k == 0) throw ParseError("--l and --k go together");
        BoundRow r = bounds_row(o.l, o.k);
        nlohmann::json j;
        j["l"] = r.l;
        j["k"] = r.k;
        j["M"] = r.bound.get_str();
        j["half"] = r.half.get_str();
        j["M_label"] = bounds_label(r.bound);
        j["half_label"] = bounds_label(r.half);
        if (!r.note.empty()) j["note"] = r.note;
        if (o.format == "json")
            os << j.dump(2) << '\n';
        else
            print_kv_text(os, j);
        return 0;
    }
    if (o.format == "json")
        os << bound_tables_json().dump(2) << '\n';
    else
        os << bound_tables_text();
    return 0;
}

nlohmann::json record_json(const DensityRecord& r) {
    nlohmann::json j;
    j["target"] = r.target;
    j["instance_id"] = r.instance_id;
    j["n_bits"] = r.n_bits;
    j["bound_M"] = r.bound;
    j["mode"] = r.mode;
    j["outcome"] = r.outcome;
    if (r.lc)
        j["lc"] = *r.lc;
    else
        j["lc"] = nullptr;
    if (r.period)
        j["period"] = *r.period;
    else
        j["period"] = nullptr;
    j["verify_ok"] = r.verify_ok;
    j["false_positives"] = r.false_positives;
    j["eval_count"] = r.eval_count;
    j["seed"] = r.seed;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

int cmd_density(const Opts& o) {
    nlohmann::json spec = load_target(o);
    DensityConfig cfg;
    if (spec.contains("family"))
        cfg.family = spec["family"].get<std::string>();
    else if (spec.contains("target"))
        cfg.family = spec["target"].get<std::string>();
    else
        throw ParseError("density spec needs a \"family\" field");
    cfg.params = spec;
    cfg.samples = o.samples;
    cfg.bound = o.bound;
    cfg.mode = mode_of(o.mode);
    cfg.early_shortcut = !o.no_early;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    DensityResult res = density_run(cfg);
    nlohmann::json summary = density_summary_json(cfg, res.summary);

    if (o.format == "json") {
        nlohmann::json j;
        j["summary"] = summary;
        nlohmann::json recs = nlohmann::json::array();
        for (const DensityRecord& r : res.records) recs.push_back(record_json(r));
        j["records"] = std::move(recs);
        std::ofstream file;
        std::ostream& os = open_out(file, o.out_path);
        os << j.dump(2) << '\n';
        return 0;
    }
    std::string csv = density_csv(res.records);
    if (!o.out_path.empty()) {
        std::ofstream file;
        open_out(file, o.out_path) << csv;
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << csv;
        std::cerr << summary.dump() << '\n';
    }
    return 0;
}

int cmd_targets(const Opts& o) {
    if (o.format == "json") {
        nlohmann::json j;
        j["targets"] = {"rsa_fe", "rsa_fc",  "dlp_fp", "dlp_f2w", "spn",
                        "stream", "ecdlp",   "lut",    "identity"};
        j["families"] = {"identity", "random_gf2", "rsa_fe", "rsa_fc", "dlp_fp",
                         "dlp_f2w",  "spn",        "stream", "ecdlp"};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << instance_help() << '\n' << family_help();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local inversion toolkit: bounded pre-image search via linear recurrences"};
    app.require_subcommand(1);
    Opts o;

    auto add_target = [&](CLI::App* c) {
        c->add_option("--target", o.target_path, "target descriptor JSON file")->required();
        c->add_option("--set", o.sets,
                      "override a descriptor field, key=value (repeatable; value is a hex "
                      "string, true, or false; takes precedence over the file)");
    };
    auto add_run = [&](CLI::App* c) {
        c->add_option("--M", o.bound, "compute bound M (terms generated: M+1)")
            ->capture_default_str();
        c->add_option("--mode", o.mode, "degree schedule")
            ->check(CLI::IsMember({"paper", "progressive"}))
            ->capture_default_str();
        c->add_flag("--no-early-stop", o.no_early,
                    "do not stop at a trajectory return; force the rank path");
    };
    auto add_io = [&](CLI::App* c) {
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        c->add_option("--out", o.out_path, "write output to a file instead of stdout");
    };

    CLI::App* inv = app.add_subcommand("invert", "recover x with F(x) = y within bound M");
    add_target(inv);
    add_run(inv);
    add_io(inv);

    CLI::App* lc = app.add_subcommand(
        "lc", "linear complexity of the iterate sequence (rank path, with minimal polynomial)");
    add_target(lc);
    add_run(lc);
    add_io(lc);

    CLI::App* orbit = app.add_subcommand("orbit", "exhaustive orbit decomposition (small maps)");
    add_target(orbit);
    add_io(orbit);

    CLI::App* bounds = app.add_subcommand("bounds", "bound tables M = l^k and floor(M/2)");
    bounds->add_option("--l", o.l, "bit length l");
    bounds->add_option("--k", o.k, "exponent k");
    add_io(bounds);

    CLI::App* density =
        app.add_subcommand("density", "sampled fraction of weak instances for a family");
    add_target(density);
    add_run(density);
    add_io(density);
    density->add_option("--samples", o.samples, "number of instances")->capture_default_str();
    density->add_option("--seed", o.seed, "master seed; per-sample sub-seeds derive from it")
        ->capture_default_str();
    density->add_option("--threads", o.threads, "worker threads (records stay deterministic)")
        ->capture_default_str();

    CLI::App* targets = app.add_subcommand("targets", "list target descriptors and families");
    add_io(targets);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(inv)) return cmd_invert(o, false);
        if (app.got_subcommand(lc)) return cmd_invert(o, true);
        if (app.got_subcommand(orbit)) return cmd_orbit(o);
        if (app.got_subcommand(bounds)) return cmd_bounds(o);
        if (app.got_subcommand(density)) return cmd_density(o);
        if (app.got_subcommand(targets)) return cmd_targets(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 1;
}
