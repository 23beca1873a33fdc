#include "scoutnav/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/number_io.hpp"

namespace scoutnav {
namespace {

constexpr int kMaxSegments = 20000;

// Follower planning callback for the requested planner kind. The sampling
// planner draws a fresh sub-seed per invocation from a shared counter, so a
// whole run is reproducible while successive plans stay independent.
FollowerPlanFn make_plan_fn(FollowerPlannerKind kind, const SamplingStarParams& base,
                            std::uint64_t run_seed) {
    if (kind == FollowerPlannerKind::kGridAStar) {
        return make_astar_plan_fn();
    }
    auto counter = std::make_shared<std::uint64_t>(0);
    return [counter, base, run_seed](const PartialMap& map, std::optional<double> fill,
                                     GridIndex start, GridIndex goal) {
        SamplingStarParams params = base;
        params.seed = run_seed ^ (0x9E3779B97F4A7C15ULL * ++*counter);
        if (fill) {
            const OptimisticView view(map, *fill);
            return plan_sampling_star(view, start, goal, params, PathProvenance::kOptimistic,
                                      *fill);
        }
        const FeasibleView view(map);
        return plan_sampling_star(view, start, goal, params, PathProvenance::kFeasible);
    };
}

// Perfect sensing along the straight segment between two poses: the camera
// footprint is applied at sample points no farther apart than half a cell.
void sweep_observe(PartialMap& map, const GroundTruthScene& scene, GridIndex from, GridIndex to,
                   SensorFootprint footprint) {
    const Point2 a = cell_center(from, scene.resolution);
    const Point2 b = cell_center(to, scene.resolution);
    const double length = std::hypot(b.x - a.x, b.y - a.y);
    const int steps = std::max(1, int(std::ceil(length / (scene.resolution * 0.5))));
    for (int i = 1; i <= steps; ++i) {
        const double t = double(i) / steps;
        const double x = a.x + (b.x - a.x) * t;
        const double y = a.y + (b.y - a.y) * t;
        const GridIndex pose{std::clamp(int(std::floor(x / scene.resolution)), 0, scene.width - 1),
                             std::clamp(int(std::floor(y / scene.resolution)), 0, scene.height - 1)};
        map.observe(scene, pose, footprint);
    }
}

RunOutcome outcome_from_termination(TerminationKind kind) {
    switch (kind) {
        case TerminationKind::kOptimal: return RunOutcome::kOptimal;
        case TerminationKind::kInfeasible: return RunOutcome::kInfeasible;
        case TerminationKind::kBudgetExhausted: return RunOutcome::kBudgetExhausted;
        case TerminationKind::kGuidePathExplored:
        case TerminationKind::kFrontiersExhausted: return RunOutcome::kStopped;
    }
    throw std::logic_error("unknown termination kind");
}

std::string csv_cell(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string_view run_outcome_name(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::kOptimal: return "optimal";
        case RunOutcome::kInfeasible: return "infeasible";
        case RunOutcome::kBudgetExhausted: return "budget_exhausted";
        case RunOutcome::kStopped: return "stopped";
    }
    throw std::logic_error("unknown run outcome");
}

std::optional<FollowerPath> plan_scene_optimum(const GroundTruthScene& scene) {
    const SceneFollowerView view(scene);
    return plan_grid_astar(view, scene.start, scene.goal, PathProvenance::kFeasible);
}

RunResult simulate(const GroundTruthScene& scene, const RunConfig& config) {
    scene.validate();
    const double fill_min = config.fill_min.value_or(scene.cost_min);
    const double fill_max = config.fill_max.value_or(scene.cost_max);
    if (!(fill_min > 0.0) || !(fill_max >= fill_min)) {
        throw std::invalid_argument("fill bounds must satisfy 0 < fill_min <= fill_max");
    }

    const MissionSpec mission{scene.start, scene.goal, fill_min, fill_max};
    ScoutIppParams scout = config.scout;
    scout.footprint = SensorFootprint{config.robot.footprint_half_extent()};
    scout.budget = config.budget;
    scout.seed = config.seed;
    if (!(config.robot.v_max > 0.0)) {
        throw std::invalid_argument("v_max must be positive");
    }

    FollowerPlanFn plan_fn = make_plan_fn(config.follower, config.sampling, config.seed);
    const auto planner = make_scout_planner(config.planner, mission, scene, scout, plan_fn);

    RunResult result;
    if (const auto oracle = plan_scene_optimum(scene)) {
        result.oracle_cost = oracle->total_cost;
    }

    PartialMap map = PartialMap::blank_like(scene);
    map.observe(scene, scene.start, scout.footprint);
    GridIndex pose = scene.start;
    double time = 0.0;
    std::optional<FollowerPath> last_feasible;

    const auto record = [&]() {
        MetricsRow row;
        row.time = time;
        row.scout_cost = planner->accumulated_cost();
        row.coverage = map.coverage();
        if (auto feasible = plan_fn(map, std::nullopt, scene.start, scene.goal)) {
            // Keep the best proven route found so far; a stochastic follower
            // may return a worse (or no) plan on a later, larger map.
            if (!last_feasible || feasible->total_cost < last_feasible->total_cost) {
                last_feasible = std::move(feasible);
            }
        }
        if (last_feasible) {
            row.feasible_cost = last_feasible->total_cost;
            if (!result.time_to_feasible) {
                result.time_to_feasible = time;
            }
            if (result.oracle_cost && !result.time_to_optimal_found &&
                last_feasible->total_cost == *result.oracle_cost) {
                result.time_to_optimal_found = time;
                result.coverage_at_optimal_found = row.coverage;
            }
        }
        if (const auto bound = plan_optimistic(map, fill_min, scene.start, scene.goal)) {
            row.bound_cost = bound->total_cost;
        }
        result.metrics.push_back(row);
    };

    record();
    for (int segment = 0;; ++segment) {
        if (segment >= kMaxSegments) {
            throw std::runtime_error("run exceeded the segment limit");
        }
        if (!planner->self_certifying()) {
            const MetricsRow& last = result.metrics.back();
            const bool optimum_held = last.feasible_cost && result.oracle_cost &&
                                      *last.feasible_cost == *result.oracle_cost;
            if (optimum_held || last.coverage == 1.0) {
                result.outcome = RunOutcome::kStopped;
                result.final_path = last_feasible;
                break;
            }
        }
        const StepResult sr = planner->step(map);
        if (sr.termination) {
            result.outcome = outcome_from_termination(sr.termination->kind);
            result.final_path = sr.termination->path;
            break;
        }
        const GridIndex next = *sr.waypoint;
        sweep_observe(map, scene, pose, next, scout.footprint);
        time += center_distance(pose, next, scene.resolution) / config.robot.v_max;
        planner->advance();
        pose = next;
        record();
    }

    result.metrics.back().terminal = true;
    result.time_to_done = time;
    result.coverage_at_done = map.coverage();
    result.scout_cost_at_done = planner->accumulated_cost();
    result.final_map = std::move(map);
    return result;
}

void write_metrics_csv(const std::vector<MetricsRow>& metrics, std::ostream& out) {
    out << "time,scout_cost,coverage,feasible_cost,bound_cost,terminal\n";
    for (const MetricsRow& row : metrics) {
        out << format_double(row.time) << ',' << format_double(row.scout_cost) << ','
            << format_double(row.coverage) << ',' << csv_cell(row.feasible_cost) << ','
            << csv_cell(row.bound_cost) << ',' << (row.terminal ? '1' : '0') << '\n';
    }
}

namespace {

struct RunRecord {
    std::size_t scene_i = 0, planner_i = 0, seed_i = 0;
    RunResult result;
};

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / double(values.size());
}

double sample_std(const std::vector<double>& values, double mean) {
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return std::sqrt(sq / double(values.size() - 1));
}

void append_summary_metric(std::ostringstream& out, const std::string& scene,
                           std::string_view planner, std::string_view metric,
                           const std::vector<std::optional<double>>& values) {
    std::vector<double> defined;
    for (const auto& v : values) {
        if (v) defined.push_back(*v);
    }
    out << scene << ',' << planner << ',' << metric << ',';
    if (!defined.empty()) {
        const double mean = mean_of(defined);
        out << format_double(mean) << ',';
        out << (defined.size() > 1 ? format_double(sample_std(defined, mean)) : std::string());
    } else {
        out << ',';
    }
    out << ',' << defined.size() << '\n';
}

void append_summary_group(std::ostringstream& out, const std::string& scene,
                          std::string_view planner, const std::vector<const RunResult*>& group) {
    const auto collect = [&](auto&& get) {
        std::vector<std::optional<double>> values;
        values.reserve(group.size());
        for (const RunResult* r : group) values.push_back(get(*r));
        return values;
    };
    append_summary_metric(out, scene, planner, "time_to_feasible",
                          collect([](const RunResult& r) { return r.time_to_feasible; }));
    append_summary_metric(out, scene, planner, "time_to_optimal_found",
                          collect([](const RunResult& r) { return r.time_to_optimal_found; }));
    append_summary_metric(out, scene, planner, "time_to_done",
                          collect([](const RunResult& r) { return r.time_to_done; }));
    append_summary_metric(out, scene, planner, "scout_cost", collect([](const RunResult& r) {
                              return std::optional<double>(r.scout_cost_at_done);
                          }));
    append_summary_metric(out, scene, planner, "coverage", collect([](const RunResult& r) {
                              return std::optional<double>(r.coverage_at_done);
                          }));
    append_summary_metric(out, scene, planner, "coverage_at_optimal_found",
                          collect([](const RunResult& r) { return r.coverage_at_optimal_found; }));
    append_summary_metric(out, scene, planner, "feasible_cost",
                          collect([](const RunResult& r) { return r.metrics.back().feasible_cost; }));
}

}  // namespace

void run_campaign(const CampaignConfig& config) {
    if (config.scenes.empty()) throw std::invalid_argument("campaign needs at least one scene");
    if (config.planners.empty()) throw std::invalid_argument("campaign needs at least one planner");
    {
        std::vector<std::uint64_t> distinct = config.seeds;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2) {
            throw std::invalid_argument("campaign needs at least two distinct seeds");
        }
    }
    if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

    std::filesystem::create_directories(config.out_dir / "runs");

    const std::size_t n_planners = config.planners.size();
    const std::size_t n_seeds = config.seeds.size();
    const std::size_t total = config.scenes.size() * n_planners * n_seeds;
    std::vector<RunRecord> records(total);

    const auto run_one = [&](std::size_t i) {
        RunRecord& rec = records[i];
        rec.scene_i = i / (n_planners * n_seeds);
        rec.planner_i = (i / n_seeds) % n_planners;
        rec.seed_i = i % n_seeds;
        RunConfig rc = config.base;
        rc.planner = config.planners[rec.planner_i];
        rc.seed = config.seeds[rec.seed_i];
        rec.result = simulate(config.scenes[rec.scene_i].scene, rc);
    };

    const int jobs = int(std::min<std::size_t>(std::max(1, config.jobs), total));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < total; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
                    run_one(i);
                }
            });
        }
        for (std::thread& t : workers) t.join();
    }

    std::ostringstream runs_csv;
    runs_csv << "scene,planner,seed,outcome,time_to_feasible,time_to_optimal_found,time_to_done,"
                "scout_cost,coverage,coverage_at_optimal_found,feasible_cost,bound_cost,"
                "oracle_cost\n";
    for (const RunRecord& rec : records) {
        const std::string& scene = config.scenes[rec.scene_i].name;
        const std::string_view planner = planner_choice_name(config.planners[rec.planner_i]);
        const std::uint64_t seed = config.seeds[rec.seed_i];
        const RunResult& r = rec.result;

        std::ostringstream metrics_csv_text;
        write_metrics_csv(r.metrics, metrics_csv_text);
        std::string run_name = scene + "_" + std::string(planner) + "_seed" + std::to_string(seed);
        atomic_write(config.out_dir / "runs" / (run_name + ".csv"), metrics_csv_text.str());

        const MetricsRow& last = r.metrics.back();
        runs_csv << scene << ',' << planner << ',' << seed << ',' << run_outcome_name(r.outcome)
                 << ',' << csv_cell(r.time_to_feasible) << ',' << csv_cell(r.time_to_optimal_found)
                 << ',' << csv_cell(r.time_to_done) << ',' << format_double(r.scout_cost_at_done)
                 << ',' << format_double(r.coverage_at_done) << ','
                 << csv_cell(r.coverage_at_optimal_found) << ',' << csv_cell(last.feasible_cost)
                 << ',' << csv_cell(last.bound_cost) << ',' << csv_cell(r.oracle_cost) << '\n';
    }
    atomic_write(config.out_dir / "runs.csv", runs_csv.str());

    std::ostringstream summary;
    summary << "scene,planner,metric,mean,std,n_defined\n";
    for (std::size_t si = 0; si < config.scenes.size(); ++si) {
        for (std::size_t pi = 0; pi < n_planners; ++pi) {
            std::vector<const RunResult*> group;
            for (const RunRecord& rec : records) {
                if (rec.scene_i == si && rec.planner_i == pi) group.push_back(&rec.result);
            }
            append_summary_group(summary, config.scenes[si].name,
                                 planner_choice_name(config.planners[pi]), group);
        }
    }
    // Cross-scene aggregation per planner, the campaign-level comparison view.
    for (std::size_t pi = 0; pi < n_planners; ++pi) {
        std::vector<const RunResult*> group;
        for (const RunRecord& rec : records) {
            if (rec.planner_i == pi) group.push_back(&rec.result);
        }
        append_summary_group(summary, "all", planner_choice_name(config.planners[pi]), group);
    }
    atomic_write(config.out_dir / "summary.csv", summary.str());

    std::ostringstream curves;
    curves << "scene,planner,seed,time_fraction,coverage,feasible_over_oracle\n";
    constexpr int kCurvePoints = 101;
    for (const RunRecord& rec : records) {
        const std::string& scene = config.scenes[rec.scene_i].name;
        const std::string_view planner = planner_choice_name(config.planners[rec.planner_i]);
        const std::uint64_t seed = config.seeds[rec.seed_i];
        const RunResult& r = rec.result;
        const double duration = r.time_to_done.value_or(0.0);
        for (int k = 0; k < kCurvePoints; ++k) {
            const double fraction = double(k) / (kCurvePoints - 1);
            const double t = fraction * duration;
            // Step interpolation: the latest row at or before t.
            const MetricsRow* at = &r.metrics.front();
            for (const MetricsRow& row : r.metrics) {
                if (row.time <= t) {
                    at = &row;
                } else {
                    break;
                }
            }
            std::optional<double> quality;
            if (at->feasible_cost && r.oracle_cost) {
                quality = *at->feasible_cost / *r.oracle_cost;  // decreases toward 1
            }
            curves << scene << ',' << planner << ',' << seed << ',' << format_double(fraction)
                   << ',' << format_double(at->coverage) << ',' << csv_cell(quality) << '\n';
        }
    }
    atomic_write(config.out_dir / "curves.csv", curves.str());
}

}  // namespace scoutnav
