// balis: balanced islands in bicolored point sets.
//
// Subcommands: find, oracle, path, ceder, gen, bench, render, validate.
// Exit codes: 0 success, 1 usage/input error, 2 infeasible brute query,
// 3 internal invariant violation (always a bug).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "balis/balanced.hpp"
#include "balis/island_path.hpp"
#include "balis/errors.hpp"
#include "balis/generator.hpp"
#include "balis/pointfile.hpp"
#include "balis/record.hpp"
#include "balis/svg.hpp"

using namespace balis;
using nlohmann::json;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Rat require_rat(const std::string& text, const std::string& flag) {
    auto q = parse_rat(text);
    if (!q) throw input_error("cannot parse " + flag + " value \"" + text + "\" as NUM/DEN");
    return *q;
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ids.push_back(std::stoi(tok));
    }
    return ids;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw input_error("cannot open output file: " + path);
    f << content;
}

ColoredPointSet load_validated(const std::string& path) {
    auto ps = load_points(path);
    if (auto v = find_violation_fast(ps))
        throw input_error("input not in general position: " + v->describe());
    return ps;
}

// ---------------------------------------------------------------- find ----

struct FindArgs {
    std::string input = "-";
    std::string alpha;
    int theorem_case = 1;
    std::string algorithm = "auto";
    int r_target = -1, b_target = -1;
    std::string svg_path;
    bool json_out = false;
    bool no_fast = false;
    int cap = kOracleDefaultCap;
};

int run_find(const FindArgs& a) {
    auto ps = load_validated(a.input);
    Algorithm algo = parse_algorithm(a.algorithm);

    ResultRecord rec;
    rec.algorithm = a.algorithm;
    double t0 = now_ms();

    if (a.r_target >= 0 || a.b_target >= 0) {
        if (a.r_target < 0 || a.b_target < 0)
            throw input_error("--r-target and --b-target must be given together");
        if (algo != Algorithm::Brute)
            throw input_error("explicit targets require --algorithm brute");
        rec.targets = TargetCounts{a.r_target, a.b_target};
        auto isl = oracle_find(ps, rec.targets, a.cap);
        rec.found = isl.has_value();
        if (isl) {
            rec.island = *isl;
            rec.certificate.family = CertFamily::Oracle;
        }
    } else {
        if (a.alpha.empty() && a.theorem_case == 1)
            throw input_error("--alpha NUM/DEN is required for case 1");
        BalancedQuery q;
        q.alpha = a.alpha.empty() ? Rat(0) : require_rat(a.alpha, "--alpha");
        q.theorem_case = a.theorem_case;
        q.algorithm = algo;
        q.allow_fast = !a.no_fast;
        q.oracle_cap = a.cap;
        rec.alpha = q.alpha;
        rec.theorem_case = a.theorem_case;
        auto res = balanced_island(ps, q);
        rec.targets = res.targets;
        rec.found = res.found;
        rec.island = res.island;
        rec.certificate = res.certificate;
    }
    rec.timing_ms = now_ms() - t0;

    if (!a.svg_path.empty()) write_output(a.svg_path, render_svg(ps, rec));
    if (a.json_out)
        std::cout << record_to_json(ps, rec).dump(2) << "\n";
    else
        std::cout << record_to_text(ps, rec);
    if (!rec.found) return algo == Algorithm::Brute ? 2 : 0;
    return 0;
}

// -------------------------------------------------------------- oracle ----

int run_oracle(const std::string& input, int r_target, int b_target, bool enumerate, int cap,
               bool json_out) {
    auto ps = load_validated(input);
    TargetCounts t{r_target, b_target};
    if (enumerate) {
        auto islands = oracle_enumerate(ps, t, cap);
        if (json_out) {
            json j;
            j["count"] = islands.size();
            j["islands"] = json::array();
            for (const auto& isl : islands)
                j["islands"].push_back(json{
                    {"members", isl.members}, {"red", isl.red}, {"blue", isl.blue}});
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << islands.size() << " island(s) with " << r_target << "R+" << b_target
                      << "B\n";
            for (const auto& isl : islands) {
                for (int id : isl.members) std::cout << id << ' ';
                std::cout << "\n";
            }
        }
        return islands.empty() ? 2 : 0;
    }
    ResultRecord rec;
    rec.algorithm = "brute";
    rec.targets = t;
    double t0 = now_ms();
    auto isl = oracle_find(ps, t, cap);
    rec.timing_ms = now_ms() - t0;
    rec.found = isl.has_value();
    if (isl) {
        rec.island = *isl;
        rec.certificate.family = CertFamily::Oracle;
    }
    if (json_out)
        std::cout << record_to_json(ps, rec).dump(2) << "\n";
    else
        std::cout << record_to_text(ps, rec);
    return rec.found ? 0 : 2;
}

// ---------------------------------------------------------------- path ----

int run_path(const std::string& input, const std::string& ids_a, const std::string& ids_b,
             bool json_out) {
    auto ps = load_validated(input);
    Island a = make_island(ps, parse_id_list(ids_a));
    Island b = make_island(ps, parse_id_list(ids_b));
    if (!is_island(ps, a)) throw input_error("NotAnIsland: --island-a is not an island");
    if (!is_island(ps, b)) throw input_error("NotAnIsland: --island-b is not an island");
    auto path = island_path(ps, a, b);
    if (json_out) {
        json j;
        j["length"] = path.size();
        j["islands"] = json::array();
        for (const auto& isl : path.islands)
            j["islands"].push_back(json{
                {"members", isl.members}, {"red", isl.red}, {"blue", isl.blue}});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "path of " << path.size() << " islands\n";
        for (const auto& isl : path.islands) {
            for (int id : isl.members) std::cout << id << ' ';
            std::cout << "(" << isl.red << "R+" << isl.blue << "B)\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- ceder ----

int run_ceder(const std::string& input, bool json_out) {
    auto ps = load_validated(input);
    double t0 = now_ms();
    auto sp = ceder_point(ps);
    double elapsed = now_ms() - t0;
    std::string why;
    if (!verify_six_partition(ps, sp, &why))
        throw internal_error("ceder certificate failed verification: " + why);
    if (json_out) {
        json j;
        j["center"] = {{"x", rat_to_string(sp.center.x)}, {"y", rat_to_string(sp.center.y)}};
        j["lines"] = json::array();
        for (const auto& [dx, dy] : sp.line_dirs)
            j["lines"].push_back({dx.get_str(), dy.get_str()});
        j["region_counts"] = sp.region_counts;
        j["timing_ms"] = elapsed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "center (" << rat_to_string(sp.center.x) << ", "
                  << rat_to_string(sp.center.y) << ")\n";
        for (const auto& [dx, dy] : sp.line_dirs)
            std::cout << "line direction (" << dx.get_str() << ", " << dy.get_str() << ")\n";
        std::cout << "region counts:";
        for (int c : sp.region_counts) std::cout << ' ' << c;
        std::cout << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- gen ----

int run_gen(int n, const std::string& fraction, const std::string& dist, std::uint64_t seed) {
    auto ps = generate(parse_distribution(dist), n, require_rat(fraction, "--red-fraction"),
                       seed);
    std::cout << "# balis gen --n " << n << " --red-fraction " << fraction << " --dist " << dist
              << " --seed " << seed << "\n";
    std::cout << serialize_point_file(ps);
    return 0;
}

// -------------------------------------------------------------- render ----

int run_render(const std::string& input, const std::string& record_path,
               const std::string& output) {
    auto ps = load_validated(input);
    std::ifstream f(record_path);
    if (!f) throw input_error("cannot open record file: " + record_path);
    json j;
    f >> j;

    ResultRecord rec;
    rec.found = j.value("found", false);
    rec.algorithm = j.contains("query") ? j["query"].value("algorithm", "auto") : "auto";
    if (j.contains("query")) {
        rec.targets.red = j["query"].value("r_target", 0);
        rec.targets.blue = j["query"].value("b_target", 0);
    }
    if (rec.found) {
        std::vector<int> members;
        for (int id : j["island"]["members"]) members.push_back(id);
        rec.island = make_island(ps, members);
        if (rec.island.red != j["island"].value("red", rec.island.red) ||
            rec.island.blue != j["island"].value("blue", rec.island.blue))
            throw input_error("record/file mismatch: island colors disagree with the point file");
        const auto& cert = j["certificate"];
        std::string family = cert.value("family", "empty");
        auto parse_point = [&](const json& pj) {
            RatPoint p;
            auto x = parse_rat(pj["x"].get<std::string>());
            auto y = parse_rat(pj["y"].get<std::string>());
            if (!x || !y) throw input_error("record certificate has a bad rational");
            p.x = *x;
            p.y = *y;
            return p;
        };
        if (family == "wedge") {
            rec.certificate.family = CertFamily::Wedge;
            rec.certificate.wedge = Wedge{parse_point(cert["apex"]), cert["first"].get<int>(),
                                          cert["last"].get<int>()};
        } else if (family == "strip") {
            rec.certificate.family = CertFamily::Strip;
            Strip s;
            s.dir_x = BigInt(cert["direction"][0].get<std::string>());
            s.dir_y = BigInt(cert["direction"][1].get<std::string>());
            s.first_id = cert["first"].get<int>();
            s.last_id = cert["last"].get<int>();
            rec.certificate.strip = s;
        } else if (family == "path") {
            rec.certificate.family = CertFamily::Path;
            PathCert pc;
            pc.apex = parse_point(cert["apex"]);
            pc.positive_first = cert["positive_window"][0].get<int>();
            pc.positive_last = cert["positive_window"][1].get<int>();
            pc.negative_first = cert["negative_window"][0].get<int>();
            pc.negative_last = cert["negative_window"][1].get<int>();
            rec.certificate.path = pc;
        } else if (family == "oracle") {
            rec.certificate.family = CertFamily::Oracle;
        }
    }
    write_output(output, render_svg(ps, rec));
    return 0;
}

// ------------------------------------------------------------ validate ----

int run_validate(const std::string& input, bool exhaustive) {
    auto ps = load_points(input);
    auto v = exhaustive ? find_violation_serial(ps) : find_violation_fast(ps);
    if (v) {
        std::cout << "invalid: " << v->describe() << "\n";
        return 1;
    }
    std::cout << "ok: " << ps.size() << " points (" << ps.red_count << "R+" << ps.blue_count
              << "B), general position\n";
    return 0;
}

// --------------------------------------------------------------- bench ----

struct BenchArgs {
    std::string sizes = "100,200,400";
    int trials = 3;
    std::string algorithms = "strip";
    std::uint64_t seed = 1;
    bool json_out = false;
    bool kernels = false;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

int run_bench(const BenchArgs& a) {
    std::vector<int> sizes;
    {
        std::stringstream ss(a.sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    }
    std::vector<std::string> algos;
    {
        std::stringstream ss(a.algorithms);
        std::string tok;
        while (std::getline(ss, tok, ',')) algos.push_back(tok);
    }
    json out = json::array();

    if (a.kernels) {
        for (int n : sizes) {
            auto ps = generate(Distribution::Uniform, n, Rat(1, 2), a.seed);
            json row;
            row["n"] = n;
            if (n <= 600) {
                std::vector<double> ts, tp;
                for (int t = 0; t < a.trials; ++t) {
                    double t0 = now_ms();
                    auto v1 = find_violation_serial(ps);
                    ts.push_back(now_ms() - t0);
                    t0 = now_ms();
                    auto v2 = find_violation_parallel(ps);
                    tp.push_back(now_ms() - t0);
                    if (v1.has_value() != v2.has_value())
                        throw internal_error("kernel mismatch: validation");
                }
                row["validate_serial_ms"] = median(ts);
                row["validate_omp_ms"] = median(tp);
            }
            {
                std::vector<double> tf;
                for (int t = 0; t < a.trials; ++t) {
                    double t0 = now_ms();
                    (void)find_violation_fast(ps);
                    tf.push_back(now_ms() - t0);
                }
                row["validate_fast_ms"] = median(tf);
            }
            if (n <= 16) {
                TargetCounts t{std::min(3, ps.red_count), std::min(3, ps.blue_count)};
                std::vector<double> ts, tp;
                for (int tr = 0; tr < a.trials; ++tr) {
                    double t0 = now_ms();
                    auto r1 = oracle_enumerate_serial(ps, t);
                    ts.push_back(now_ms() - t0);
                    t0 = now_ms();
                    auto r2 = oracle_enumerate(ps, t);
                    tp.push_back(now_ms() - t0);
                    if (r1.size() != r2.size()) throw internal_error("kernel mismatch: oracle");
                }
                row["oracle_serial_ms"] = median(ts);
                row["oracle_omp_ms"] = median(tp);
            }
            {
                auto sp = ceder_point(ps);
                std::vector<double> tp, tb;
                for (int t = 0; t < a.trials; ++t) {
                    double t0 = now_ms();
                    bool f1 = six_partition_feasible_at(ps, sp.center);
                    tp.push_back(now_ms() - t0);
                    bool f2 = f1;
                    if (n <= 300) {
                        t0 = now_ms();
                        f2 = six_partition_feasible_at_brute(ps, sp.center);
                        tb.push_back(now_ms() - t0);
                    }
                    if (f1 != f2) throw internal_error("kernel mismatch: six-partition");
                }
                row["ceder_scan_pruned_ms"] = median(tp);
                if (!tb.empty()) row["ceder_scan_brute_ms"] = median(tb);
            }
            out.push_back(row);
        }
    } else {
        for (const auto& algo : algos) {
            for (int n : sizes) {
                auto ps = generate(Distribution::Uniform, n, Rat(1, 2), a.seed + n);
                json row;
                row["algorithm"] = algo;
                row["n"] = n;
                std::vector<double> times;
                if (algo == "strip") {
                    TargetCounts t{(ps.red_count + 2) / 2, (ps.blue_count + 2) / 2};
                    StripSearchStats stats;
                    for (int tr = 0; tr < a.trials; ++tr) {
                        double t0 = now_ms();
                        (void)strip_search(ps, t, &stats, true);
                        times.push_back(now_ms() - t0);
                    }
                    row["events"] = stats.events_processed;
                } else if (algo == "wedge") {
                    TargetCounts t{(ps.red_count + 2) / 2, (ps.blue_count + 2) / 2};
                    WedgeSearchStats stats;
                    for (int tr = 0; tr < a.trials; ++tr) {
                        double t0 = now_ms();
                        (void)wedge_search(ps, t, &stats, true);
                        times.push_back(now_ms() - t0);
                    }
                    row["cells"] = stats.cells_visited;
                } else if (algo == "fast") {
                    Rat alpha(1, 6);
                    if (!evaluate_fast_precondition(ps, alpha).satisfied)
                        throw input_error("fast precondition unexpectedly fails in bench");
                    // The ceder stage runs once; trials time the fan + path stages.
                    double t0 = now_ms();
                    SixPartition center = ceder_point(ps);
                    double ceder_ms = now_ms() - t0;
                    std::vector<double> fan_t, path_t;
                    for (int tr = 0; tr < a.trials; ++tr) {
                        FastStageTimes st;
                        t0 = now_ms();
                        (void)fast_balanced_island(ps, alpha, nullptr, nullptr, &st, &center);
                        times.push_back(now_ms() - t0);
                        fan_t.push_back(st.fan_ms);
                        path_t.push_back(st.path_ms);
                    }
                    row["stage_ceder_ms"] = ceder_ms;
                    row["stage_fan_ms"] = median(fan_t);
                    row["stage_path_ms"] = median(path_t);
                } else if (algo == "brute") {
                    if (n > kOracleDefaultCap) continue;
                    TargetCounts t{std::min(2, ps.red_count), std::min(2, ps.blue_count)};
                    for (int tr = 0; tr < a.trials; ++tr) {
                        double t0 = now_ms();
                        (void)oracle_find(ps, t);
                        times.push_back(now_ms() - t0);
                    }
                } else {
                    throw input_error("unknown bench algorithm: " + algo);
                }
                row["median_ms"] = median(times);
                out.push_back(row);
            }
        }
    }

    if (a.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& row : out) {
            std::ostringstream line;
            for (auto it = row.begin(); it != row.end(); ++it)
                line << it.key() << "=" << it.value() << "  ";
            std::cout << line.str() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced islands in bicolored point sets"};
    app.require_subcommand(1);

    FindArgs fa;
    auto* find = app.add_subcommand("find", "find a balanced island");
    find->add_option("--input", fa.input, "point file or - for stdin");
    find->add_option("--alpha", fa.alpha, "balance fraction NUM/DEN in [0, 1/2]");
    find->add_option("--case", fa.theorem_case, "theorem case (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    find->add_option("--algorithm", fa.algorithm, "auto|wedge|strip|fast|brute");
    find->add_option("--r-target", fa.r_target, "explicit red target (brute only)");
    find->add_option("--b-target", fa.b_target, "explicit blue target (brute only)");
    find->add_option("--svg", fa.svg_path, "also render an SVG to this file");
    find->add_flag("--json", fa.json_out, "machine-readable output");
    find->add_flag("--no-fast", fa.no_fast, "disable the fast path in auto mode");
    find->add_option("--cap", fa.cap, "oracle size cap");

    std::string o_input = "-";
    int o_rt = 0, o_bt = 0, o_cap = kOracleDefaultCap;
    bool o_enum = false, o_json = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force island search");
    oracle->add_option("--input", o_input);
    oracle->add_option("--r-target", o_rt)->required();
    oracle->add_option("--b-target", o_bt)->required();
    oracle->add_flag("--enumerate", o_enum, "list all matching islands");
    oracle->add_option("--cap", o_cap);
    oracle->add_flag("--json", o_json);

    std::string p_input = "-", p_a, p_b;
    bool p_json = false;
    auto* path = app.add_subcommand("path", "island path between two islands");
    path->add_option("--input", p_input);
    path->add_option("--island-a", p_a, "comma-separated point ids")->required();
    path->add_option("--island-b", p_b, "comma-separated point ids")->required();
    path->add_flag("--json", p_json);

    std::string c_input = "-";
    bool c_json = false;
    auto* ceder = app.add_subcommand("ceder", "six-partition point certificate");
    ceder->add_option("--input", c_input);
    ceder->add_flag("--json", c_json);

    int g_n = 0;
    std::string g_fraction = "1/2", g_dist = "uniform";
    std::uint64_t g_seed = 1;
    auto* gen = app.add_subcommand("gen", "generate a point file");
    gen->add_option("--n", g_n)->required();
    gen->add_option("--red-fraction", g_fraction);
    gen->add_option("--dist", g_dist, "uniform|polygon-trap|clusters");
    gen->add_option("--seed", g_seed);

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "timing table");
    bench->add_option("--sizes", ba.sizes);
    bench->add_option("--trials", ba.trials);
    bench->add_option("--algorithms", ba.algorithms);
    bench->add_option("--seed", ba.seed);
    bench->add_flag("--json", ba.json_out);
    bench->add_flag("--kernels", ba.kernels, "compare serial and OpenMP kernels");

    std::string r_input = "-", r_record, r_output = "-";
    auto* render = app.add_subcommand("render", "render a result record as SVG");
    render->add_option("--input", r_input);
    render->add_option("--record", r_record)->required();
    render->add_option("--output", r_output);

    std::string v_input = "-";
    bool v_exhaustive = false;
    auto* validate = app.add_subcommand("validate", "check general position");
    validate->add_option("--input", v_input);
    validate->add_flag("--exhaustive", v_exhaustive, "O(n^3) triple scan");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*find) return run_find(fa);
        if (*oracle) return run_oracle(o_input, o_rt, o_bt, o_enum, o_cap, o_json);
        if (*path) return run_path(p_input, p_a, p_b, p_json);
        if (*ceder) return run_ceder(c_input, c_json);
        if (*gen) return run_gen(g_n, g_fraction, g_dist, g_seed);
        if (*bench) return run_bench(ba);
        if (*render) return run_render(r_input, r_record, r_output);
        if (*validate) return run_validate(v_input, v_exhaustive);
    } catch (const internal_error& e) {
        std::cerr << "internal error (theorem violation): " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
