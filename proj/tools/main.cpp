// SPDX-License-Identifier: MIT
//
// d2lab command line. Three subcommands:
//   verify   run verification suites and report pass/fail
//   witness  emit the per-level witness table (CSV or JSON)
//   sample   tabulate u over a grid slice (CSV)
//
// Exit codes: 0 success, 1 suite failure (verify) or internal error,
// 2 configuration error (bad flag value, bad profile, bad config file).

#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "d2lab/io.hpp"
#include "d2lab/ladder.hpp"
#include "d2lab/sweep.hpp"
#include "d2lab/verify.hpp"

namespace {

using namespace d2lab;

struct CommonOpts {
    std::string phi = "log";
    int dim = 3;
    int K = 10;
    bool signed_sum = true;
    std::string t_rule = "harmonic";
    unsigned seed = 0;
    bool serial = false;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--phi", c.phi, "profile selector: log | loglog | pow:<alpha>")
        ->capture_default_str();
    cmd->add_option("--dim", c.dim, "ambient dimension n >= 2")->capture_default_str();
    cmd->add_option("--K", c.K, "number of ladder levels (1..12)")->capture_default_str();
    cmd->add_flag("--signed,!--single-sum", c.signed_sum,
                  "signed two-family superposition (default); --single-sum keeps "
                  "only the plus sign");
    cmd->add_option("--t_rule,--t-rule", c.t_rule,
                    "level exponent schedule: harmonic | geometric")
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
    cmd->add_flag("--serial", c.serial, "disable the parallel sweep kernels");
    cmd->add_option("--config", c.config_path,
                    "key=value file with the same keys as the long flags; "
                    "explicit flags override it");
}

// ------------------------------------------------------------------ config file
// A config file is plain key=value lines ('#' starts a comment, blank lines are
// skipped) using the same keys as the long flags. CLI11 2.4 never reads a config
// file attached to a subcommand (App::_parse only processes config on the root
// app), so the file is applied here by hand, after parsing, and only to options
// whose flag was not given on the command line. Explicit flags always win.

std::string trim(const std::string& s) {
    const char* ws = " \t\r";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

int parse_config_int(const std::string& key, const std::string& val) {
    std::size_t pos = 0;
    int x = 0;
    try {
        x = std::stoi(val, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (val.empty() || pos != val.size()) {
        throw std::invalid_argument("config key '" + key +
                                    "': expected an integer, got '" + val + "'");
    }
    return x;
}

bool parse_config_bool(const std::string& key, const std::string& val) {
    if (val == "true" || val == "1") return true;
    if (val == "false" || val == "0") return false;
    throw std::invalid_argument("config key '" + key +
                                "': expected true or false, got '" + val + "'");
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(where + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw std::invalid_argument(where + ": empty key");
        kv.emplace_back(std::move(key), trim(line.substr(eq + 1)));
    }
    return kv;
}

struct ConfigKey {
    std::string key;   // file key
    std::string flag;  // matching long flag, for the override check
    std::function<void(const std::string&)> set;
};

void apply_config(const CLI::App* cmd, const std::string& path,
                  const std::vector<ConfigKey>& keys) {
    if (path.empty()) return;
    for (const auto& [key, val] : read_config_file(path)) {
        const ConfigKey* bound = nullptr;
        for (const ConfigKey& k : keys) {
            if (key == k.key) {
                bound = &k;
                break;
            }
        }
        if (bound == nullptr) {
            throw std::invalid_argument("config file: unknown key '" + key + "'");
        }
        if (cmd->count(bound->flag) > 0) continue;
        bound->set(val);
    }
}

std::vector<ConfigKey> common_config_keys(CommonOpts& c) {
    return {
        {"phi", "--phi", [&c](const std::string& v) { c.phi = v; }},
        {"dim", "--dim",
         [&c](const std::string& v) { c.dim = parse_config_int("dim", v); }},
        {"K", "--K", [&c](const std::string& v) { c.K = parse_config_int("K", v); }},
        {"signed", "--signed",
         [&c](const std::string& v) { c.signed_sum = parse_config_bool("signed", v); }},
        {"t_rule", "--t_rule", [&c](const std::string& v) { c.t_rule = v; }},
        {"seed", "--seed",
         [&c](const std::string& v) {
             const int x = parse_config_int("seed", v);
             if (x < 0) throw std::invalid_argument("config key 'seed': must be >= 0");
             c.seed = static_cast<unsigned>(x);
         }},
        {"serial", "--serial",
         [&c](const std::string& v) { c.serial = parse_config_bool("serial", v); }},
    };
}

verify::Options to_options(const CommonOpts& c) {
    verify::Options o;
    o.phi = c.phi;
    o.n = c.dim;
    o.K = c.K;
    o.signed_sum = c.signed_sum;
    if (c.t_rule == "harmonic") {
        o.t_rule = ladder::TRule::harmonic;
    } else if (c.t_rule == "geometric") {
        o.t_rule = ladder::TRule::geometric;
    } else {
        throw std::invalid_argument("unknown t rule: " + c.t_rule +
                                    " (expected harmonic or geometric)");
    }
    o.seed = c.seed;
    o.exec = c.serial ? sweep::Exec::serial : sweep::Exec::parallel;
    return o;
}

void emit(const std::string& payload, const std::string& out) {
    if (out.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        io::write_file(out, payload);
    }
}

int run_verify(const CommonOpts& c, const std::string& suite, const std::string& out) {
    const verify::Options o = to_options(c);
    std::vector<verify::Suite> suites;
    if (suite == "all") {
        suites = verify::run_all(o);
    } else {
        suites.push_back(verify::run_suite(suite, o));
    }
    std::fputs(verify::report_text(suites).c_str(), stdout);
    if (!out.empty()) {
        io::write_file(out, verify::report_json(suites).dump(2) + "\n");
    }
    for (const verify::Suite& s : suites) {
        if (!s.pass()) return 1;
    }
    return 0;
}

int run_witness(const CommonOpts& c, const std::string& out, const std::string& format) {
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("witness format must be csv or json");
    }
    const verify::Options o = to_options(c);
    ladder::LadderParams params;
    params.n = o.n;
    params.phi = phi::make_phi(o.phi);
    params.K = o.K;
    params.signed_sum = o.signed_sum;
    params.t_rule = o.t_rule;
    const ladder::Ladder lad = ladder::build_ladder(params);
    const std::vector<ladder::WitnessRecord> recs = ladder::witness_sequence(lad);
    emit(format == "csv" ? io::witness_csv(recs)
                         : io::witness_json(recs).dump(2) + "\n",
         out);
    return 0;
}

int run_sample(const CommonOpts& c, int ball_k, int grid, const std::string& box,
               const std::string& out, const std::string& format) {
    if (format != "csv") {
        throw std::invalid_argument("sample emits CSV only");
    }
    if (grid < 2) {
        throw std::invalid_argument("grid must be at least 2");
    }
    const verify::Options o = to_options(c);
    ladder::LadderParams params;
    params.n = o.n;
    params.phi = phi::make_phi(o.phi);
    params.K = o.K;
    params.signed_sum = o.signed_sum;
    params.t_rule = o.t_rule;
    const ladder::Ladder lad = ladder::build_ladder(params);
    std::string payload;
    if (!box.empty()) {
        double lo = 0.0, hi = 0.0;
        if (std::sscanf(box.c_str(), "%lf:%lf", &lo, &hi) != 2 || !(lo < hi)) {
            throw std::invalid_argument("box must be lo:hi with lo < hi");
        }
        payload = io::sample_box_csv(lad, lo, hi, grid, o.exec);
    } else {
        payload = io::sample_ball_csv(lad, ball_k, grid, o.exec);
    }
    emit(payload, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"d2lab: a verification laboratory for twice differentiable "
                 "functions with continuous Laplacian and bounded, "
                 "discontinuous Hessian"};
    app.require_subcommand(1);

    CommonOpts c;

    CLI::App* v = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::string vout;
    add_common(v, c);
    v->add_option("--suite", suite,
                  "phi | block | ladder | ma | geometry | radial | gallery | all")
        ->capture_default_str();
    v->add_option("--out", vout, "also write a JSON report to this path");

    CLI::App* w = app.add_subcommand("witness", "emit the per-level witness table");
    std::string wout;
    std::string wfmt = "csv";
    add_common(w, c);
    w->add_option("--format", wfmt, "csv | json")->capture_default_str();
    w->add_option("--out", wout, "write here instead of stdout");

    CLI::App* sm = app.add_subcommand("sample", "tabulate u over a grid slice");
    std::string sout;
    std::string sfmt = "csv";
    std::string box;
    int ball_k = 3;
    int grid = 64;
    add_common(sm, c);
    sm->add_option("--ball", ball_k, "sample the plus ball at this level")
        ->capture_default_str();
    sm->add_option("--grid", grid, "grid points per axis")->capture_default_str();
    sm->add_option("--box", box, "axis range lo:hi for a global plane slice "
                                 "instead of the ball");
    sm->add_option("--format", sfmt, "csv (the only sample format)")
        ->capture_default_str();
    sm->add_option("--out", sout, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (v->parsed()) {
            std::vector<ConfigKey> keys = common_config_keys(c);
            keys.push_back({"suite", "--suite",
                            [&suite](const std::string& x) { suite = x; }});
            keys.push_back({"out", "--out",
                            [&vout](const std::string& x) { vout = x; }});
            apply_config(v, c.config_path, keys);
            return run_verify(c, suite, vout);
        }
        if (w->parsed()) {
            std::vector<ConfigKey> keys = common_config_keys(c);
            keys.push_back({"format", "--format",
                            [&wfmt](const std::string& x) { wfmt = x; }});
            keys.push_back({"out", "--out",
                            [&wout](const std::string& x) { wout = x; }});
            apply_config(w, c.config_path, keys);
            return run_witness(c, wout, wfmt);
        }
        if (sm->parsed()) {
            std::vector<ConfigKey> keys = common_config_keys(c);
            keys.push_back({"ball", "--ball", [&ball_k](const std::string& x) {
                                ball_k = parse_config_int("ball", x);
                            }});
            keys.push_back({"grid", "--grid", [&grid](const std::string& x) {
                                grid = parse_config_int("grid", x);
                            }});
            keys.push_back(
                {"box", "--box", [&box](const std::string& x) { box = x; }});
            keys.push_back({"format", "--format",
                            [&sfmt](const std::string& x) { sfmt = x; }});
            keys.push_back({"out", "--out",
                            [&sout](const std::string& x) { sout = x; }});
            apply_config(sm, c.config_path, keys);
            return run_sample(c, ball_k, grid, box, sout, sfmt);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
