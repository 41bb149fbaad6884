#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssband/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAssumption = 3;

void write_error_json(const std::string& output_dir, const std::string& kind,
                      const std::string& message) {
    nlohmann::json doc{{"error", kind}, {"message", message}};
    if (!output_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(output_dir, ec);
        if (!ec) {
            std::ofstream out(std::filesystem::path(output_dir) /
                              "error.json");
            if (out) {
                out << doc.dump(2) << '\n';
                return;
            }
        }
    }
    std::cout << doc.dump(2) << '\n';
}

std::map<std::string, std::string> collect_overrides(
    const std::vector<std::string>& extras) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        std::string tok = extras[i];
        if (tok.rfind("--", 0) != 0)
            throw ssband::ConfigError("unexpected argument: " + tok);
        tok = tok.substr(2);
        const auto eq = tok.find('=');
        if (eq != std::string::npos) {
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        } else {
            if (i + 1 >= extras.size())
                throw ssband::ConfigError("flag --" + tok + " needs a value");
            kv[tok] = extras[++i];
        }
    }
    return kv;
}

int run_basis_info(const std::string& family, int order, int j0, int depth) {
    using namespace ssband;
    const FilterBank bank = load_filter(family, order);
    ScalingProfile prof = cascade_evaluate(bank, depth);
    if (j0 <= 0) {
        j0 = 1;
        while ((1 << j0) < 2 * (2 * bank.support - 1)) ++j0;
    }
    compute_constants(prof, j0);
    const auto rep = verify_assumption2(prof, 1e-6);
    nlohmann::json doc{
        {"family", family},
        {"N", order},
        {"K", bank.support},
        {"j0", j0},
        {"t0", prof.t0},
        {"sigma2_max", prof.sigma2_max},
        {"sigma2_curvature", prof.sigma2_curvature},
        {"upsilon", prof.upsilon},
        {"upsilon_squared_reading", prof.upsilon_squared_reading},
        {"tau", prof.tau},
        {"psi_sup", prof.psi_sup},
        {"assumption2", nlohmann::json{{"unique_max", rep.unique_max},
                                       {"curvature_negative",
                                        rep.curvature_negative},
                                       {"margin", rep.margin},
                                       {"pass", rep.pass()}}}};
    std::cout << doc.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive confidence bands under self-similarity: "
                 "simulation harness"};
    app.require_subcommand(1);
    app.allow_extras();

    auto* basis = app.add_subcommand("basis-info",
                                     "print basis constants and the "
                                     "variance-profile verdict");
    std::string family = "daubechies";
    int order = 6;
    int j0 = 0;
    int depth = 12;
    basis->add_option("--family", family);
    basis->add_option("--N", order);
    basis->add_option("--j0", j0);
    basis->add_option("--cascade_depth", depth);

    const char* experiment_names[] = {"coverage", "exactness",  "rates",
                                      "smoothness", "gumbel",
                                      "testing-bound", "adversarial"};
    std::string config_path;
    for (const char* name : experiment_names) {
        auto* sub = app.add_subcommand(
            name, std::string("run the ") + name + " experiment");
        sub->add_option("--config", config_path, "key=value config file");
        sub->allow_extras();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << '\n';
        write_error_json("", "config", e.what());
        return kExitConfig;
    }

    if (basis->parsed()) {
        try {
            return run_basis_info(family, order, j0, depth);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            write_error_json("", "config", e.what());
            return kExitConfig;
        }
    }

    std::string output_dir;
    try {
        CLI::App* sub = app.get_subcommands().front();
        std::map<std::string, std::string> kv;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw ssband::ConfigError("cannot open config file: " +
                                          config_path);
            std::stringstream ss;
            ss << in.rdbuf();
            kv = ssband::parse_config_text(ss.str());
        }
        std::string name = sub->get_name();
        kv["experiment"] = name == "testing-bound" ? "testing_bound" : name;
        for (const auto& [k, v] : collect_overrides(sub->remaining())) kv[k] = v;
        if (const char* env = std::getenv("SSBAND_SEED")) kv["seed"] = env;

        ssband::ExperimentConfig cfg = ssband::config_from_map(kv);
        output_dir = cfg.output_dir;
        const auto report = ssband::run_experiment(cfg);
        ssband::write_report(report);
        const auto agg = nlohmann::json::parse(report.aggregates_json);
        std::cout << agg.dump(2) << '\n';
        return 0;
    } catch (const ssband::Assumption2Failed& e) {
        std::cerr << "assumption gate: " << e.what() << '\n';
        write_error_json(output_dir, "assumption2", e.what());
        return kExitAssumption;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        write_error_json(output_dir, "config", e.what());
        return kExitConfig;
    }
}
