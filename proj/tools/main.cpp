// Command-line surface: series tables, sieving checks, verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclesieve/cache.hpp"
#include "cyclesieve/checks.hpp"
#include "cyclesieve/csp.hpp"
#include "cyclesieve/lie.hpp"

using nlohmann::ordered_json;
using namespace cyclesieve;

namespace {

constexpr int kMaxSeriesN = 10;
constexpr int kMaxProductN = 8;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("expected a comma-separated integer list");
        out.push_back(value);
    }
    if (out.empty()) throw CLI::ValidationError("expected a nonempty integer list");
    return out;
}

Partition parse_partition(const std::string& text) {
    return Partition::from_unsorted(parse_int_list(text));
}

PartitionTuple parse_tuple(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (!j.is_array()) throw CLI::ValidationError("expected a JSON array of partitions");
    std::vector<Partition> entries;
    for (const auto& entry : j) {
        if (!entry.is_array()) throw CLI::ValidationError("expected a JSON array of partitions");
        std::vector<int> parts;
        for (const auto& v : entry) parts.push_back(v.get<int>());
        entries.push_back(Partition::from_unsorted(parts));
    }
    return PartitionTuple(std::move(entries));
}

std::string partition_key(const Partition& p) {
    std::string key = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) key += ",";
        key += std::to_string(p.part(i));
    }
    return key + "]";
}

ordered_json partition_array(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < p.length(); ++i) a.push_back(p.part(i));
    return a;
}

ordered_json tuple_array(const PartitionTuple& t) {
    ordered_json a = ordered_json::array();
    for (const auto& p : t.entries()) a.push_back(partition_array(p));
    return a;
}

ordered_json schur_object(const SymFunc& f) {
    SymFunc s = convert(f, Basis::Schur);
    ordered_json o = ordered_json::object();
    for (const auto& [lam, c] : s.coeffs())
        o[partition_key(lam)] = to_integer(c).convert_to<long long>();
    return o;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct SeriesEntry {
    ordered_json index;
    SymFunc value;
    std::string label;  // table row prefix; empty for a bare expansion
};

int emit_series(const std::string& command, ordered_json params,
                const std::vector<SeriesEntry>& entries, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        j["command"] = command;
        j["params"] = std::move(params);
        ordered_json series = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json row;
            row["index"] = e.index;
            row["schur"] = schur_object(e.value);
            series.push_back(std::move(row));
        }
        j["series"] = std::move(series);
        print_json(j);
    } else {
        for (const auto& e : entries) {
            if (!e.label.empty()) std::cout << e.label << ": ";
            std::cout << to_string(convert(e.value, Basis::Schur)) << "\n";
        }
    }
    return 0;
}

int run_kw(int n, const std::string& format) {
    auto series = kw_series(n);
    std::vector<SeriesEntry> entries;
    for (int r = 1; r <= n; ++r)
        entries.push_back({ordered_json(r), series[static_cast<size_t>(r - 1)],
                           "r=" + std::to_string(r)});
    ordered_json params;
    params["n"] = n;
    return emit_series("kw", std::move(params), entries, format);
}

int run_stembridge(const std::vector<int>& nu, const std::string& format) {
    auto series = stembridge_series(nu);
    std::vector<SeriesEntry> entries;
    for (size_t r = 1; r <= series.size(); ++r)
        entries.push_back({ordered_json(r), series[r - 1], "r=" + std::to_string(r)});
    ordered_json params;
    params["nu"] = nu;
    return emit_series("stembridge", std::move(params), entries, format);
}

int run_schocker(int a, int b, int r, const std::string& kind, const std::string& format) {
    SymFunc f = schocker(a, b, r, kind == "sign" ? SchockerKind::Sign : SchockerKind::Trivial);
    ordered_json params;
    params["a"] = a;
    params["b"] = b;
    params["r"] = r;
    params["kind"] = kind;
    return emit_series("schocker", std::move(params), {{ordered_json(r), f, ""}}, format);
}

int run_wreath(int a, int b, const std::string& ul_text, const std::string& format) {
    PartitionTuple ul = parse_tuple(ul_text);
    if (ul.slots() != a || ul.total() != b)
        throw CLI::ValidationError("--ul must list " + std::to_string(a) +
                                   " partitions with total size " + std::to_string(b));
    SymFunc f = wreath_char(a, ul);
    ordered_json params;
    params["a"] = a;
    params["b"] = b;
    params["ul"] = tuple_array(ul);
    if (format == "table") std::cout << "dim: " << wreath_dim(ul).str() << "\n";
    return emit_series("wreath", std::move(params), {{tuple_array(ul), f, ""}}, format);
}

int run_lie(const std::string& lambda_text, const std::string& format) {
    Partition lam = parse_partition(lambda_text);
    if (lam.size() > kMaxProductN)
        throw CLI::ValidationError("--lambda is capped at size " + std::to_string(kMaxProductN));
    SymFunc f = higher_lie(lam);
    ordered_json params;
    params["lambda"] = partition_array(lam);
    return emit_series("lie", std::move(params), {{partition_array(lam), f, ""}}, format);
}

int run_csp(const std::string& alpha_text, const std::string& stat_name,
            const std::string& format) {
    Composition alpha = parse_int_list(alpha_text);
    int n = 0;
    for (int v : alpha) {
        if (v < 0) throw CLI::ValidationError("--alpha entries must be nonnegative");
        n += v;
    }
    if (n < 1 || n > kMaxSeriesN)
        throw CLI::ValidationError("--alpha must sum to a length in [1, " +
                                   std::to_string(kMaxSeriesN) + "]");
    WordStat stat;
    if (stat_name == "maj")
        stat = [](std::span<const int> w) { return maj(w); };
    else if (stat_name == "majn")
        stat = [](std::span<const int> w) { return maj_n(w); };
    else if (stat_name == "flex")
        stat = [](std::span<const int> w) { return flex(w); };
    else
        stat = [](std::span<const int>) { return 0; };  // const0: a failing control

    CSPReport report = verify_csp(enumerate_words_by_content(alpha), n, stat);
    if (format == "json") {
        ordered_json j;
        j["command"] = "csp";
        ordered_json params;
        params["alpha"] = alpha;
        params["stat"] = stat_name;
        j["params"] = std::move(params);
        ordered_json result;
        result["holds"] = report.holds;
        result["order"] = report.order;
        ordered_json profile = ordered_json::object();
        for (const auto& [size, count] : report.orbit_profile)
            profile[std::to_string(size)] = count;
        result["orbit_profile"] = std::move(profile);
        if (report.witness) {
            ordered_json w;
            w["r"] = report.witness->r;
            w["fixed_count"] = report.witness->fixed_count.convert_to<long long>();
            w["value_integral"] = report.witness->value_integral;
            if (report.witness->value_integral)
                w["value"] = report.witness->value.convert_to<long long>();
            result["witness"] = std::move(w);
        }
        j["result"] = std::move(result);
        print_json(j);
    } else {
        std::cout << "csp holds: " << (report.holds ? "true" : "false") << "\n";
        std::cout << "order: " << report.order << "\n";
        for (const auto& [size, count] : report.orbit_profile)
            std::cout << "orbits of size " << size << ": " << count << "\n";
        if (report.witness) {
            std::cout << "witness r=" << report.witness->r
                      << ": fixed points " << report.witness->fixed_count.str()
                      << ", evaluation ";
            if (report.witness->value_integral)
                std::cout << report.witness->value.str() << "\n";
            else
                std::cout << "non-integral\n";
        }
    }
    return report.holds ? 0 : 1;
}

int run_verify(const std::string& suite, int max_n, const std::string& format) {
    VerifyCaps caps = VerifyCaps::capped(max_n);
    std::vector<CheckResult> results;
    if (suite == "all") {
        results = run_all_checks(caps);
    } else {
        using Runner = CheckResult (*)(const VerifyCaps&);
        static const std::map<std::string, Runner> runners = {
            {"kw", check_cyclic_induction_vs_oracle},
            {"fibers", check_fiber_gf_equalities},
            {"csp", check_csp_suite},
            {"evals", check_tableau_root_evaluations},
            {"stembridge", check_block_cyclic_branching},
            {"schocker", check_wreath_one_dim_expansions},
            {"frobenius", check_graded_frobenius_routes},
            {"lie", check_higher_lie_vs_descent_sum},
            {"symmetries", check_symmetries_and_conjugation},
            {"mash", check_companion_statistic_probe},
            {"kernel", check_kernel_identities},
        };
        auto it = runners.find(suite);
        if (it == runners.end()) throw CLI::ValidationError("unknown suite: " + suite);
        results.push_back(it->second(caps));
    }

    bool all_pass = true;
    if (format == "json") {
        ordered_json j;
        j["command"] = "verify";
        ordered_json params;
        params["suite"] = suite;
        params["max_n"] = max_n;
        j["params"] = std::move(params);
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            ordered_json row;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            checks.push_back(std::move(row));
        }
        j["checks"] = std::move(checks);
        print_json(j);
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            std::cout << (r.pass ? "PASS" : "FAIL") << ": " << r.name << " -- " << r.detail
                      << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cyclic-sieving and symmetric-function toolkit"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "Directory for persisted per-degree tables (overrides CYCLESIEVE_CACHE_DIR)")
        ->envname("CYCLESIEVE_CACHE_DIR");

    std::string format = "table";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));

    // Let global options like --format appear after the subcommand name too.
    auto make_sub = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    int kw_n = 0;
    auto* cmd_kw = make_sub("kw", "Cyclic induction series for the full cycle");
    cmd_kw->add_option("--n", kw_n, "Word length")->required()->check(CLI::Range(1, kMaxSeriesN));

    std::string nu_text;
    auto* cmd_stem = make_sub("stembridge", "Branching series for a cyclic subgroup");
    cmd_stem->add_option("--nu", nu_text, "Cycle type, e.g. 2,1")->required();

    int sa = 0, sb = 0, sr = 1;
    std::string kind = "trivial";
    auto* cmd_schocker =
        make_sub("schocker", "One-dimensional wreath induction expansion");
    cmd_schocker->add_option("--a", sa, "Cycle length")->required()->check(CLI::Range(1, kMaxProductN));
    cmd_schocker->add_option("--b", sb, "Number of cycles")->required()->check(CLI::Range(1, kMaxProductN));
    cmd_schocker->add_option("--r", sr, "Character index in [a]");
    cmd_schocker->add_option("--kind", kind, "trivial or sign")
        ->check(CLI::IsMember({"trivial", "sign"}));

    int wa = 0, wb = 0;
    std::string ul_text;
    auto* cmd_wreath = make_sub("wreath", "Irreducible wreath module induction");
    cmd_wreath->add_option("--a", wa, "Cycle length")->required()->check(CLI::Range(1, kMaxProductN));
    cmd_wreath->add_option("--b", wb, "Number of cycles")->required()->check(CLI::Range(1, kMaxProductN));
    cmd_wreath->add_option("--ul", ul_text, "Partition tuple as JSON, e.g. [[],[1]]")->required();

    std::string lambda_text;
    auto* cmd_lie = make_sub("lie", "Higher Lie characteristic of a cycle type");
    cmd_lie->add_option("--lambda", lambda_text, "Cycle type, e.g. 2,1")->required();

    std::string alpha_text, stat_name = "maj";
    auto* cmd_csp = make_sub("csp", "Cyclic sieving check on one content class");
    cmd_csp->add_option("--alpha", alpha_text, "Content, e.g. 2,1,1")->required();
    cmd_csp->add_option("--stat", stat_name, "Statistic")
        ->check(CLI::IsMember({"maj", "majn", "flex", "const0"}));

    std::string suite = "all";
    int max_n = 8;
    auto* cmd_verify = make_sub("verify", "Run the identity verification suite");
    cmd_verify->add_option("--suite", suite, "Suite name or 'all'");
    cmd_verify->add_option("--max-n", max_n, "Size cap")->check(CLI::Range(1, kMaxSeriesN));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!cache_dir.empty()) set_cache_directory(cache_dir);

    try {
        if (*cmd_kw) return run_kw(kw_n, format);
        if (*cmd_stem) return run_stembridge(parse_int_list(nu_text), format);
        if (*cmd_schocker) {
            if (sa * sb > kMaxProductN)
                throw CLI::ValidationError("--a times --b is capped at " +
                                           std::to_string(kMaxProductN));
            return run_schocker(sa, sb, sr, kind, format);
        }
        if (*cmd_wreath) {
            if (wa * wb > kMaxProductN)
                throw CLI::ValidationError("--a times --b is capped at " +
                                           std::to_string(kMaxProductN));
            return run_wreath(wa, wb, ul_text, format);
        }
        if (*cmd_lie) return run_lie(lambda_text, format);
        if (*cmd_csp) return run_csp(alpha_text, stat_name, format);
        if (*cmd_verify) return run_verify(suite, max_n, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
