#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scoutnav/environments.hpp"
#include "scoutnav/number_io.hpp"
#include "scoutnav/scene_io.hpp"
#include "scoutnav/sim.hpp"

namespace {

using namespace scoutnav;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitScene = 3;

struct MissionOpts {
    std::string follower = "astar";
    std::optional<double> budget;
    std::optional<double> fill_min;
    std::optional<double> fill_max;
    double v_max = 10.0;
    double flying_height = 2.0;
    double fov_deg = 90.0;
    int samples_per_step = 20;
    double max_edge_length = 8.0;
    int retry_cap = 10;
    int sampling_iterations = 2500;
    double rewire_radius = 2.0;
    double goal_bias = 0.05;
};

void add_mission_options(CLI::App* cmd, MissionOpts& opts) {
    cmd->add_option("--follower", opts.follower, "Follower planner: astar or sampling")
        ->check(CLI::IsMember({"astar", "sampling"}));
    cmd->add_option("--budget", opts.budget, "Scout cost budget (unlimited when absent)");
    cmd->add_option("--fill-min", opts.fill_min, "Optimistic fill cost (default: scene cost_min)");
    cmd->add_option("--fill-max", opts.fill_max, "Pessimistic fill cost (default: scene cost_max)");
    cmd->add_option("--v-max", opts.v_max, "Scout speed, m/s");
    cmd->add_option("--flying-height", opts.flying_height, "Scout altitude, m");
    cmd->add_option("--fov-deg", opts.fov_deg, "Camera field of view, degrees");
    cmd->add_option("--samples-per-step", opts.samples_per_step, "Tree samples per decision");
    cmd->add_option("--max-edge-length", opts.max_edge_length, "Tree edge length cap, m");
    cmd->add_option("--retry-cap", opts.retry_cap, "Sampling retries per tree node");
    cmd->add_option("--sampling-iterations", opts.sampling_iterations,
                    "Iterations of the sampling follower planner");
    cmd->add_option("--rewire-radius", opts.rewire_radius, "Sampling planner rewire radius, m");
    cmd->add_option("--goal-bias", opts.goal_bias, "Sampling planner goal bias, [0, 1)");
}

RunConfig make_run_config(const MissionOpts& opts) {
    RunConfig config;
    config.follower = opts.follower == "sampling" ? FollowerPlannerKind::kSamplingStar
                                                  : FollowerPlannerKind::kGridAStar;
    config.sampling.iterations = opts.sampling_iterations;
    config.sampling.rewire_radius = opts.rewire_radius;
    config.sampling.goal_bias = opts.goal_bias;
    config.robot.v_max = opts.v_max;
    config.robot.flying_height = opts.flying_height;
    config.robot.fov_deg = opts.fov_deg;
    config.scout.samples_per_step = opts.samples_per_step;
    config.scout.max_edge_length = opts.max_edge_length;
    config.scout.retry_cap = opts.retry_cap;
    config.budget = opts.budget;
    config.fill_min = opts.fill_min;
    config.fill_max = opts.fill_max;
    return config;
}

PlannerChoice planner_from_name(const std::string& name) {
    const auto choice = parse_planner_choice(name);
    if (!choice) {
        throw std::invalid_argument("unknown planner: " + name);
    }
    return *choice;
}

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

struct GenerateOpts {
    std::string out;
    std::string kind = "soil";
    SceneSpec spec;
    double box_cost = 1.0;
};

int do_generate(const GenerateOpts& opts) {
    GroundTruthScene scene;
    if (opts.kind == "soil") {
        scene = generate_scene(opts.spec);
    } else if (opts.kind == "box-open") {
        scene = make_open_box_scene(opts.spec.width, opts.spec.height, opts.spec.resolution,
                                    opts.box_cost);
    } else {
        scene = make_closed_box_scene(opts.spec.width, opts.spec.height, opts.spec.resolution,
                                      opts.box_cost);
    }
    save_scene(scene, opts.out);
    std::cout << "scene=" << opts.out << "\n";
    return kExitOk;
}

struct RunOpts {
    std::string scene;
    std::string planner = "path_aware";
    std::uint64_t seed = 0;
    std::string out;
    MissionOpts mission;
};

int do_run(const RunOpts& opts) {
    const GroundTruthScene scene = load_scene(opts.scene);
    RunConfig config = make_run_config(opts.mission);
    config.planner = planner_from_name(opts.planner);
    config.seed = opts.seed;

    const RunResult result = simulate(scene, config);
    const MetricsRow& last = result.metrics.back();
    std::cout << "outcome=" << run_outcome_name(result.outcome) << "\n";
    std::cout << "oracle_cost=" << opt_cell(result.oracle_cost) << "\n";
    std::cout << "feasible_cost=" << opt_cell(last.feasible_cost) << "\n";
    std::cout << "bound_cost=" << opt_cell(last.bound_cost) << "\n";
    std::cout << "time_to_feasible=" << opt_cell(result.time_to_feasible) << "\n";
    std::cout << "time_to_optimal_found=" << opt_cell(result.time_to_optimal_found) << "\n";
    std::cout << "time_to_done=" << opt_cell(result.time_to_done) << "\n";
    std::cout << "scout_cost=" << format_double(result.scout_cost_at_done) << "\n";
    std::cout << "coverage=" << format_double(result.coverage_at_done) << "\n";

    if (!opts.out.empty()) {
        const std::filesystem::path dir(opts.out);
        std::filesystem::create_directories(dir);
        {
            std::ofstream metrics(dir / "metrics.csv", std::ios::binary);
            write_metrics_csv(result.metrics, metrics);
        }
        if (result.final_path) {
            std::ofstream path_csv(dir / "path.csv", std::ios::binary);
            write_path_csv(*result.final_path, path_csv);
        }
        save_exploration_raster(*result.final_map, dir / "explored.pgm");
    }
    return kExitOk;
}

struct CampaignOpts {
    std::vector<std::string> scenes;
    std::vector<std::string> planners;
    int seeds = 10;
    int jobs = 1;
    std::string out;
    MissionOpts mission;
};

int do_campaign(const CampaignOpts& opts) {
    CampaignConfig config;
    for (const std::string& dir : opts.scenes) {
        const std::filesystem::path path(dir);
        std::string name = path.filename().string();
        if (name.empty()) {
            name = path.parent_path().filename().string();
        }
        config.scenes.push_back(NamedScene{name, load_scene(path)});
    }
    std::vector<std::string> planner_names = opts.planners;
    if (planner_names.empty()) {
        planner_names = {"path_aware", "goal_aware", "exploration", "cost_aware", "frontier_cost"};
    }
    for (const std::string& name : planner_names) {
        config.planners.push_back(planner_from_name(name));
    }
    if (opts.seeds < 2) {
        throw std::invalid_argument("campaign needs at least two seeds");
    }
    for (int s = 0; s < opts.seeds; ++s) {
        config.seeds.push_back(std::uint64_t(s));
    }
    config.base = make_run_config(opts.mission);
    config.out_dir = opts.out;
    config.jobs = opts.jobs;
    run_campaign(config);
    std::cout << "runs=" << config.scenes.size() * config.planners.size() * config.seeds.size()
              << "\n";
    std::cout << "out=" << opts.out << "\n";
    return kExitOk;
}

struct OracleOpts {
    std::string scene;
    std::string out;
};

int do_oracle(const OracleOpts& opts) {
    const GroundTruthScene scene = load_scene(opts.scene);
    const auto optimum = plan_scene_optimum(scene);
    std::cout << "feasible=" << (optimum ? "true" : "false") << "\n";
    std::cout << "oracle_cost=" << (optimum ? format_double(optimum->total_cost) : std::string())
              << "\n";
    if (optimum && !opts.out.empty()) {
        std::ofstream path_csv(opts.out, std::ios::binary);
        write_path_csv(*optimum, path_csv);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scout-follower cooperative path planning toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value defaults; command-line flags override");

    GenerateOpts gen_opts;
    CLI::App* gen = app.add_subcommand("generate", "Generate a scene directory");
    gen->fallthrough();  // lets top-level flags such as --config follow the subcommand
    gen->add_option("--out", gen_opts.out, "Scene directory to create")->required();
    gen->add_option("--kind", gen_opts.kind, "soil, box-open or box-closed")
        ->check(CLI::IsMember({"soil", "box-open", "box-closed"}));
    gen->add_option("--width", gen_opts.spec.width, "Cells");
    gen->add_option("--height", gen_opts.spec.height, "Cells");
    gen->add_option("--resolution", gen_opts.spec.resolution, "Meters per cell");
    gen->add_option("--soil-count", gen_opts.spec.soil_count, "Distinct soil cost levels");
    gen->add_option("--gradient", gen_opts.spec.gradient, "cost_max / cost_min ratio");
    gen->add_option("--obstacle-fraction", gen_opts.spec.obstacle_fraction,
                    "Fraction of blocked cells");
    gen->add_option("--blob-scale", gen_opts.spec.blob_scale, "Soil feature size, m");
    gen->add_option("--base-cost", gen_opts.spec.base_cost, "Cheapest soil cost");
    gen->add_option("--seed", gen_opts.spec.seed, "Generator seed");
    gen->add_option("--cost", gen_opts.box_cost, "Uniform cost of box scenes");

    RunOpts run_opts;
    CLI::App* run = app.add_subcommand("run", "Run one scouting mission");
    run->fallthrough();
    run->add_option("--scene", run_opts.scene, "Scene directory")->required();
    run->add_option("--planner", run_opts.planner,
                    "path_aware, goal_aware, exploration, cost_aware or frontier_cost");
    run->add_option("--seed", run_opts.seed, "Run seed");
    run->add_option("--out", run_opts.out, "Directory for metrics, path and exploration outputs");
    add_mission_options(run, run_opts.mission);

    CampaignOpts campaign_opts;
    CLI::App* campaign = app.add_subcommand("campaign", "Sweep scenes x planners x seeds");
    campaign->fallthrough();
    campaign->add_option("--scene", campaign_opts.scenes, "Scene directory (repeatable)")
        ->required();
    campaign->add_option("--planner", campaign_opts.planners,
                         "Planner to include (repeatable; default: all)");
    campaign->add_option("--seeds", campaign_opts.seeds, "Number of seeds, 0..N-1 (at least 2)");
    campaign->add_option("--jobs", campaign_opts.jobs, "Parallel workers");
    campaign->add_option("--out", campaign_opts.out, "Output directory")->required();
    add_mission_options(campaign, campaign_opts.mission);

    OracleOpts oracle_opts;
    CLI::App* oracle = app.add_subcommand("oracle", "True optimum of a fully known scene");
    oracle->fallthrough();
    oracle->add_option("--scene", oracle_opts.scene, "Scene directory")->required();
    oracle->add_option("--out", oracle_opts.out, "Write the optimal path as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (gen->parsed()) return do_generate(gen_opts);
        if (run->parsed()) return do_run(run_opts);
        if (campaign->parsed()) return do_campaign(campaign_opts);
        return do_oracle(oracle_opts);
    } catch (const FormatError& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return kExitScene;
    } catch (const GenerationError& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return kExitScene;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "scene error: " << e.what() << "\n";
        return kExitScene;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
