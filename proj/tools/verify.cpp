// Command-line front end: runs named checks, caches results as JSON, and
// prints text or JSON reports.  Exit codes: 0 all pass, 1 some fail or
// inconclusive, 2 usage error.
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2coh/checks.hpp"
#include "sl2coh/cohomology.hpp"

using json = nlohmann::ordered_json;
using namespace sl2coh;

namespace {

std::string default_cache_dir() {
    if (const char* env = std::getenv("SL2COH_CACHE_DIR")) return env;
    return ".sl2coh-cache";
}

CheckParams profile_params(const CheckDescriptor& desc, const std::string& profile) {
    return profile == "full" ? desc.full : desc.quick;
}

json report_doc(const RunReport& rep, const CheckDescriptor& desc) {
    json doc = json::parse(rep.to_json());
    doc["claim"] = desc.claim;
    return doc;
}

void print_text(const RunReport& rep, const CheckDescriptor& desc) {
    std::cout << "[" << to_string(rep.status) << "] " << rep.check << " " << rep.params.str()
              << "\n    " << desc.claim << "\n";
}

int run_jobs(const std::vector<std::pair<const CheckDescriptor*, CheckParams>>& jobs,
             const std::string& cache_dir, bool use_cache, bool as_json, int threads) {
    std::vector<RunReport> reports(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const auto& [desc, params] = jobs[i];
            try {
                RunReport rep;
                if (!use_cache || !cache_load(cache_dir, desc->name, params, rep)) {
                    rep = run_check(desc->name, params);
                    cache_store(cache_dir, rep);
                }
                reports[i] = std::move(rep);
            } catch (const std::exception& e) {
                errors[i] = e.what();
                reports[i].check = desc->name;
                reports[i].params = params;
                reports[i].status = Status::fail;
                reports[i].payload = "{}";
            }
        }
    };
    int n = std::max(1, std::min<int>(threads, int(jobs.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_pass = true;
    json out = json::array();
    for (size_t i = 0; i < jobs.size(); ++i) {
        if (reports[i].status != Status::pass) all_pass = false;
        if (as_json) {
            json doc = report_doc(reports[i], *jobs[i].first);
            if (!errors[i].empty()) doc["error"] = errors[i];
            out.push_back(doc);
        } else {
            print_text(reports[i], *jobs[i].first);
            if (!errors[i].empty()) std::cout << "    error: " << errors[i] << "\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact GF(2) verification of a characteristic-2 SL2 quotient example"};
    app.require_subcommand(1);

    int D = 4, E = 4, r = 1, i_max = 1, r_max = 2;
    int threads = int(std::max(1u, std::thread::hardware_concurrency()));
    bool as_json = false;
    std::string cache_dir = default_cache_dir();
    std::string profile = "quick";

    app.add_option("--cache-dir", cache_dir, "Result cache directory (env SL2COH_CACHE_DIR)");
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--jobs", threads, "Worker pool size");

    auto* list = app.add_subcommand("list", "List the check registry");
    list->fallthrough();

    auto* run = app.add_subcommand("run", "Run one check");
    run->fallthrough();
    std::string check_name;
    run->add_option("check", check_name, "Check name")->required();
    run->add_option("--max-degree,-D", D, "Coefficient degree bound D");
    run->add_option("--truncation,-E", E, "Per-factor degree bound E");
    run->add_option("--r", r, "Frobenius kernel index");
    run->add_option("--i-max", i_max, "Highest cohomological degree");
    run->add_option("--r-max", r_max, "Highest Frobenius kernel index");
    bool no_cache = false;
    run->add_flag("--no-cache", no_cache, "Recompute even when cached");

    auto* run_all = app.add_subcommand("run-all", "Run every check at profile bounds");
    run_all->fallthrough();
    run_all->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    bool all_no_cache = false;
    run_all->add_flag("--no-cache", all_no_cache, "Recompute even when cached");

    auto* report = app.add_subcommand("report", "Report cached results at profile bounds");
    report->fallthrough();
    report->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*list) {
            if (as_json) {
                json out = json::array();
                for (const auto& d : check_registry())
                    out.push_back({{"name", d.name},
                                   {"claim", d.claim},
                                   {"quick", d.quick.str()},
                                   {"full", d.full.str()}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& d : check_registry())
                    std::cout << d.name << "\n    " << d.claim << "\n";
            }
            return 0;
        }

        if (*run) {
            const CheckDescriptor* desc = find_check(check_name);
            if (!desc) {
                std::cerr << "unknown check: " << check_name << "\n";
                return 2;
            }
            CheckParams params{D, E, r, i_max, r_max};
            return run_jobs({{desc, params}}, cache_dir, !no_cache, as_json, 1);
        }

        if (*run_all) {
            std::vector<std::pair<const CheckDescriptor*, CheckParams>> jobs;
            for (const auto& d : check_registry())
                jobs.emplace_back(&d, profile_params(d, profile));
            return run_jobs(jobs, cache_dir, !all_no_cache, as_json, threads);
        }

        if (*report) {
            bool all_pass = true;
            std::vector<std::string> missing;
            json out = json::array();
            for (const auto& d : check_registry()) {
                CheckParams params = profile_params(d, profile);
                RunReport rep;
                if (!cache_load(cache_dir, d.name, params, rep)) {
                    missing.push_back(d.name + " " + params.str());
                    all_pass = false;
                    continue;
                }
                if (rep.status != Status::pass) all_pass = false;
                if (as_json)
                    out.push_back(report_doc(rep, d));
                else
                    print_text(rep, d);
            }
            if (as_json) {
                json doc;
                doc["results"] = out;
                doc["missing"] = missing;
                std::cout << doc.dump(2) << "\n";
            } else {
                for (const auto& m : missing) std::cout << "[missing] " << m << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const GuardError& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
