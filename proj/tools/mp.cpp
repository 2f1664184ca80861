// mp: matching powers of monomial ideals and the theorem harness.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "mp/cache.hpp"
#include "mp/error.hpp"
#include "mp/graph.hpp"
#include "mp/homology.hpp"
#include "mp/ideal_io.hpp"
#include "mp/serialize.hpp"
#include "mp/theorems.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Input {
    std::string g6;
    std::string edge_file;
    std::string ideal_file;
};

void add_input_options(CLI::App& cmd, Input& in) {
    auto* g6 = cmd.add_option("--g6", in.g6, "graph in graph6 format (also -g6)");
    auto* e = cmd.add_option("-e,--edges", in.edge_file, "edge-list file, '-' for stdin");
    auto* i = cmd.add_option("-i,--ideal", in.ideal_file, "ideal text file, '-' for stdin");
    g6->excludes(e)->excludes(i);
    e->excludes(i);
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw mp::InvalidInput("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

mp::MonomialIdeal load_ideal(const Input& in) {
    if (!in.g6.empty()) return mp::edge_ideal(mp::parse_graph6(in.g6));
    if (!in.edge_file.empty()) return mp::edge_ideal(mp::parse_edge_list(read_source(in.edge_file)));
    if (!in.ideal_file.empty()) return mp::parse_ideal_text(read_source(in.ideal_file));
    throw mp::InvalidInput("one of -g6, -e or -i is required");
}

void attach_cache(const std::string& dir) {
    std::optional<std::filesystem::path> path;
    if (!dir.empty()) path = dir;
    else path = mp::DiskCache::from_environment();
    if (path) mp::BettiCache::instance().set_store(std::make_shared<mp::DiskCache>(*path));
}

// CLI11 only takes single-character short options, so accept -g6 by rewriting.
std::vector<std::string> normalized_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        std::string a = argv[i];
        if (a == "-g6") a = "--g6";
        else if (a.rfind("-g6=", 0) == 0) a = "-" + a;
        args.push_back(a);
    }
    return args;  // reversed, as CLI11 expects
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matching powers of monomial ideals and edge ideals"};
    app.require_subcommand(1);

    Input power_in, summary_in;
    int power_k = 1;
    auto* power = app.add_subcommand("power", "print the k-th matching power in ideal text format");
    add_input_options(*power, power_in);
    power->add_option("-k", power_k, "matching power index")->check(CLI::NonNegativeNumber);

    std::string summary_field = "q";
    std::optional<int> summary_k;
    bool summary_json = false;
    std::string summary_cache;
    auto* summ = app.add_subcommand("summary", "height, dim, depth, pdim and Cohen-Macaulayness of S/I");
    add_input_options(*summ, summary_in);
    summ->add_option("--field", summary_field, "q, gf2, gf3 or gf:<p>");
    summ->add_option("-k", summary_k, "use the k-th matching power")->check(CLI::PositiveNumber);
    summ->add_flag("--json", summary_json, "JSON output");
    summ->add_option("--cache-dir", summary_cache, "persistent Betti cache (default $MP_CACHE_DIR)");

    int classify_max_n = 5, classify_min_n = 2, classify_jobs = 0;
    std::string classify_field = "q", classify_out, classify_cache;
    auto* classify = app.add_subcommand("classify", "graphs whose matching powers are all Cohen-Macaulay");
    classify->add_option("--max-n", classify_max_n, "largest vertex count")->check(CLI::Range(2, 8));
    classify->add_option("--min-n", classify_min_n, "smallest vertex count")->check(CLI::Range(2, 8));
    classify->add_option("--field", classify_field, "q, gf2, gf3 or gf:<p>");
    classify->add_option("--jobs", classify_jobs, "worker threads, 0 for all cores");
    classify->add_option("--out", classify_out, "output file (default stdout)");
    classify->add_option("--cache-dir", classify_cache, "persistent Betti cache (default $MP_CACHE_DIR)");

    std::string verify_id, verify_field, verify_cache;
    int verify_max_n = 6, verify_jobs = 0, verify_sample = 0;
    std::uint64_t verify_seed = mp::VerifyOptions{}.seed;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run one theorem suite");
    verify->add_option("theorem", verify_id, "theorem id")->required();
    verify->add_option("--max-n", verify_max_n, "largest vertex count in the corpus");
    verify->add_option("--field", verify_field, "q, gf2, gf3 or gf:<p> (default: the suite's own)");
    verify->add_option("--jobs", verify_jobs, "worker threads, 0 for all cores");
    verify->add_option("--sample", verify_sample, "last-power: random graphs on max-n + 1 vertices");
    verify->add_option("--seed", verify_seed, "seed for --sample");
    verify->add_flag("--json", verify_json, "JSON report");
    verify->add_option("--cache-dir", verify_cache, "persistent Betti cache (default $MP_CACHE_DIR)");

    try {
        app.parse(normalized_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (power->parsed()) {
            const mp::MonomialIdeal ideal = load_ideal(power_in);
            std::cout << mp::format_ideal_text(mp::matching_power(ideal, power_k));
            return 0;
        }

        if (summ->parsed()) {
            attach_cache(summary_cache);
            const mp::FieldSpec field = mp::FieldSpec::parse(summary_field);
            mp::MonomialIdeal ideal = load_ideal(summary_in);
            if (summary_k) ideal = mp::matching_power(ideal, *summary_k);
            const mp::HomologicalSummary s = mp::summary(ideal, field);
            if (summary_json) {
                std::cout << mp::summary_to_json(s) << "\n";
            } else {
                std::cout << "nvars  " << s.nvars << "\nheight " << s.height << "\ndim    " << s.dim << "\ndepth  "
                          << s.depth << "\npdim   " << s.pdim << "\ncm     " << (s.is_cm ? "true" : "false")
                          << "\nfield  " << s.field.name() << "\n";
            }
            return 0;
        }

        if (classify->parsed()) {
            attach_cache(classify_cache);
            const mp::FieldSpec field = mp::FieldSpec::parse(classify_field);
            std::vector<mp::ClassificationRecord> all;
            for (int n = classify_min_n; n <= classify_max_n; ++n) {
                const auto start = std::chrono::steady_clock::now();
                auto records = mp::classify_all(n, field, classify_jobs);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                std::cerr << "n = " << n << ": " << records.size() << " graphs with all powers Cohen-Macaulay ("
                          << secs << " s)\n";
                all.insert(all.end(), records.begin(), records.end());
            }
            const std::string json = mp::records_to_json(all, field) + "\n";
            if (classify_out.empty()) {
                std::cout << json;
            } else {
                std::ofstream out(classify_out, std::ios::binary | std::ios::trunc);
                if (!(out << json)) throw std::runtime_error("cannot write " + classify_out);
            }
            return 0;
        }

        if (verify->parsed()) {
            const auto ids = mp::theorem_ids();
            if (std::find(ids.begin(), ids.end(), verify_id) == ids.end()) {
                std::cerr << "unknown theorem id '" << verify_id << "'; expected one of:";
                for (const auto& id : ids) std::cerr << " " << id;
                std::cerr << "\n";
                return kExitUsage;
            }
            attach_cache(verify_cache);
            mp::VerifyOptions opts;
            opts.max_n = verify_max_n;
            opts.jobs = verify_jobs;
            opts.sample_size = verify_sample;
            opts.seed = verify_seed;
            if (!verify_field.empty()) opts.fields.push_back(mp::FieldSpec::parse(verify_field));
            const mp::VerificationReport report = mp::run_verification(verify_id, opts);
            if (verify_json) {
                std::cout << mp::report_to_json(report) << "\n";
            } else {
                std::cout << report.id << ": " << (report.passed() ? "PASS" : "FAIL") << "\n"
                          << "corpus: " << report.corpus << "\n"
                          << "instances: " << report.instances << "\n";
                for (const auto& note : report.notes) std::cout << "  " << note << "\n";
                auto print = [](const char* label, const mp::Witness& w) {
                    std::cout << label << ": graph6 " << w.graph6;
                    if (w.k) std::cout << " k " << *w.k;
                    if (w.x) std::cout << " x " << *w.x;
                    std::cout << " field " << w.field << ": " << w.detail << "\n";
                };
                constexpr std::size_t kShownFindings = 20;
                for (std::size_t i = 0; i < report.findings.size() && i < kShownFindings; ++i) {
                    print("finding", report.findings[i]);
                }
                if (report.findings.size() > kShownFindings) {
                    std::cout << "... " << report.findings.size() - kShownFindings << " more findings (see --json)\n";
                }
                for (const auto& w : report.failures) print("failure", w);
                std::cout << "elapsed: " << report.elapsed_seconds << " s\n";
            }
            return report.passed() ? 0 : kExitFailed;
        }
    } catch (const mp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mp::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mp::Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return 0;
}
