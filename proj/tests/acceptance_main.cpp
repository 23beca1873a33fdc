// Acceptance gate: ten end-to-end criteria for the scout-follower planning
// stack, each printed as one PASS/FAIL line. The process exit code is the
// number of failed criteria. Tolerances are pinned as constants below;
// quality claims about route costs are exact (bitwise) by design.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scoutnav/cost_view.hpp"
#include "scoutnav/environments.hpp"
#include "scoutnav/follower_planner.hpp"
#include "scoutnav/partial_map.hpp"
#include "scoutnav/sim.hpp"
#include "support/fixtures.hpp"
#include "support/grid_dijkstra.hpp"

namespace {

using namespace scoutnav;
namespace fs = std::filesystem;

// Pinned acceptance tolerances.
constexpr double kBoundTol = 1e-9;          // slack for monotone metric series
constexpr double kC3FreeCoverageMax = 0.40; // open box: explored share of free space
constexpr double kC4CoverageMax = 0.50;     // closed box: explored share of all cells
constexpr double kSignTestAlpha = 0.05;     // one-sided sign test threshold
constexpr double kC7CoverageMax = 0.95;     // coverage when optimality is certified
constexpr double kC8QfTol = 0.05;           // sampling-vs-exact final route cost, relative
constexpr double kC8TauTol = 0.25;          // sampling-vs-exact mean completion time, relative
constexpr double kC1TimeLimitSec = 600.0;   // wall-clock budget for the big sweep

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(4);
    out << v;
    return out.str();
}

// ---------------------------------------------------------------------------
// Criterion 2 support: series invariants applied to every run recorded by any
// criterion below.

int g_series_runs = 0;
int g_series_errors = 0;
std::string g_first_series_error;

void check_series(const RunResult& r, const std::string& label, bool exact_follower = true) {
    ++g_series_runs;
    const auto flag = [&](const std::string& why) {
        ++g_series_errors;
        if (g_first_series_error.empty()) {
            g_first_series_error = label + ": " + why;
        }
    };
    for (std::size_t i = 1; i < r.metrics.size(); ++i) {
        const MetricsRow& prev = r.metrics[i - 1];
        const MetricsRow& row = r.metrics[i];
        if (prev.bound_cost && row.bound_cost && *row.bound_cost < *prev.bound_cost - kBoundTol) {
            flag("lower bound decreased");
            return;
        }
        if (prev.feasible_cost &&
            (!row.feasible_cost || *row.feasible_cost > *prev.feasible_cost + kBoundTol)) {
            flag("feasible cost increased");
            return;
        }
    }
    // The zero-gap identity at termination requires the exact follower; the
    // sampling follower only converges toward the optimum (its route quality
    // is gated separately with an explicit tolerance).
    if (exact_follower && r.outcome == RunOutcome::kOptimal) {
        const MetricsRow& last = r.metrics.back();
        if (!last.feasible_cost || !last.bound_cost || !r.oracle_cost ||
            *last.feasible_cost != *last.bound_cost || *last.feasible_cost != *r.oracle_cost) {
            flag("optimal run ended with a nonzero bound gap");
        }
    }
}

SceneSpec sweep_spec(double gradient, double obstacle_fraction, std::uint64_t seed) {
    SceneSpec spec;
    spec.gradient = gradient;
    spec.obstacle_fraction = obstacle_fraction;
    spec.seed = seed;
    return spec;
}

constexpr double kGradients[3] = {2.0, 4.0, 8.0};
constexpr double kFractions[4] = {0.0, 0.1, 0.2, 0.3};

// ---------------------------------------------------------------------------
// Criterion 1: the primary planner terminates with an exact verdict across a
// broad generated corpus, within a wall-clock budget.

Criterion criterion_1() {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    int n_runs = 0, n_optimal = 0, n_infeasible = 0;
    for (double gradient : kGradients) {
        for (double fraction : kFractions) {
            for (std::uint64_t seed = 0; seed < 9; ++seed) {
                ++n_runs;
                const std::string label = "sweep g" + fmt(gradient) + " f" + fmt(fraction) +
                                          " s" + std::to_string(seed);
                try {
                    const GroundTruthScene scene =
                        generate_scene(sweep_spec(gradient, fraction, 7700 + seed * 13 +
                                                                          std::uint64_t(gradient) +
                                                                          std::uint64_t(fraction * 100)));
                    RunConfig config;
                    config.seed = seed;
                    const RunResult r = simulate(scene, config);
                    check_series(r, label);
                    if (r.outcome == RunOutcome::kOptimal) {
                        ++n_optimal;
                        if (!r.oracle_cost || !r.metrics.back().feasible_cost ||
                            *r.metrics.back().feasible_cost != *r.oracle_cost) {
                            c.fail(label + ": optimal verdict does not match the oracle exactly");
                        }
                        if (!r.final_path || r.final_path->total_cost != *r.oracle_cost) {
                            c.fail(label + ": final route cost differs from the oracle");
                        }
                    } else if (r.outcome == RunOutcome::kInfeasible) {
                        ++n_infeasible;
                        if (r.oracle_cost) {
                            c.fail(label + ": infeasible verdict on a solvable scene");
                        }
                    } else {
                        c.fail(label + ": unexpected outcome " +
                               std::string(run_outcome_name(r.outcome)));
                    }
                } catch (const std::exception& e) {
                    c.fail(label + ": exception: " + e.what());
                }
            }
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= kC1TimeLimitSec) {
        c.fail("sweep took " + fmt(elapsed) + " s, budget " + fmt(kC1TimeLimitSec) + " s");
    }
    if (c.pass) {
        c.detail = std::to_string(n_runs) + " scenes (" + std::to_string(n_optimal) +
                   " optimal, " + std::to_string(n_infeasible) + " infeasible) in " +
                   fmt(elapsed) + " s";
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criteria 3 and 4: the goal-directed scout proves its verdict from a small
// portion of the box scenes, while blanket exploration keeps scanning.

Criterion criterion_3() {
    Criterion c;
    const GroundTruthScene scene = make_open_box_scene(64, 48, 0.5, 1.0);
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RunConfig config;
        config.seed = seed;
        const RunResult r = simulate(scene, config);
        check_series(r, "open box s" + std::to_string(seed));
        if (r.outcome != RunOutcome::kOptimal) {
            c.fail("seed " + std::to_string(seed) + ": outcome " +
                   std::string(run_outcome_name(r.outcome)));
            continue;
        }
        int free_total = 0, free_explored = 0;
        for (int row = 0; row < scene.height; ++row) {
            for (int col = 0; col < scene.width; ++col) {
                const GridIndex cell{col, row};
                if (scene.is_obstacle(cell)) continue;
                ++free_total;
                if (r.final_map->state(cell) != CellState::kUnknown) ++free_explored;
            }
        }
        const double share = double(free_explored) / double(free_total);
        worst = std::max(worst, share);
        if (share > kC3FreeCoverageMax) {
            c.fail("seed " + std::to_string(seed) + ": explored " + fmt(share) +
                   " of free space, limit " + fmt(kC3FreeCoverageMax));
        }
    }
    if (c.pass) {
        c.detail = "10/10 optimal, worst free-space coverage " + fmt(worst);
    }
    return c;
}

Criterion criterion_4() {
    Criterion c;
    const GroundTruthScene scene = make_closed_box_scene(64, 48, 0.5, 1.0);
    double worst = 0.0, worst_margin = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RunConfig config;
        config.seed = seed;
        const RunResult r = simulate(scene, config);
        check_series(r, "closed box s" + std::to_string(seed));
        if (r.outcome != RunOutcome::kInfeasible) {
            c.fail("seed " + std::to_string(seed) + ": outcome " +
                   std::string(run_outcome_name(r.outcome)));
            continue;
        }
        worst = std::max(worst, r.coverage_at_done);
        if (r.coverage_at_done > kC4CoverageMax) {
            c.fail("seed " + std::to_string(seed) + ": coverage " + fmt(r.coverage_at_done) +
                   ", limit " + fmt(kC4CoverageMax));
        }

        RunConfig expl = config;
        expl.planner = PlannerChoice::kExploration;
        const RunResult e = simulate(scene, expl);
        check_series(e, "closed box exploration s" + std::to_string(seed));
        worst_margin = std::min(worst_margin, e.coverage_at_done - r.coverage_at_done);
        if (!(e.coverage_at_done > r.coverage_at_done)) {
            c.fail("seed " + std::to_string(seed) +
                   ": exploration did not need more coverage (" + fmt(e.coverage_at_done) +
                   " vs " + fmt(r.coverage_at_done) + ")");
        }
    }
    if (c.pass) {
        c.detail = "10/10 infeasible, worst coverage " + fmt(worst) +
                   ", min exploration margin " + fmt(worst_margin);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criteria 5-7 share one campaign: 30 generated scenes x 5 seeds x
// {path-aware, goal-aware, exploration}.

struct ComparisonData {
    // Indexed [scene * 5 + seed] per planner.
    std::vector<std::optional<double>> tau_opt_path, tau_opt_goal, tau_opt_expl;
    std::vector<double> tau_done_path, tau_done_expl;
    std::vector<std::optional<double>> tau_first_path, tau_first_goal, tau_first_expl;
    std::vector<double> path_optimal_coverage;          // coverage at done, optimal runs only
    std::vector<std::optional<double>> expl_cov_at_opt; // coverage when optimum first held
    int runs = 0;
    std::string error;
};

ComparisonData run_comparison_campaign() {
    ComparisonData data;
    for (int i = 0; i < 30; ++i) {
        const double gradient = kGradients[i % 3];
        const double fraction = kFractions[(i / 3) % 4];
        GroundTruthScene scene;
        try {
            scene = generate_scene(sweep_spec(gradient, fraction, 1000 + i));
        } catch (const std::exception& e) {
            data.error = "scene " + std::to_string(i) + ": " + e.what();
            return data;
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const std::string label = "comparison scene " + std::to_string(i) + " seed " +
                                      std::to_string(seed);
            RunConfig config;
            config.seed = seed;

            config.planner = PlannerChoice::kPathAware;
            const RunResult path = simulate(scene, config);
            config.planner = PlannerChoice::kGoalAware;
            const RunResult goal = simulate(scene, config);
            config.planner = PlannerChoice::kExploration;
            const RunResult expl = simulate(scene, config);
            check_series(path, label + " path");
            check_series(goal, label + " goal");
            check_series(expl, label + " exploration");
            data.runs += 3;

            data.tau_opt_path.push_back(path.time_to_optimal_found);
            data.tau_opt_goal.push_back(goal.time_to_optimal_found);
            data.tau_opt_expl.push_back(expl.time_to_optimal_found);
            data.tau_done_path.push_back(path.time_to_done.value_or(0.0));
            data.tau_done_expl.push_back(expl.time_to_done.value_or(0.0));
            data.tau_first_path.push_back(path.time_to_feasible);
            data.tau_first_goal.push_back(goal.time_to_feasible);
            data.tau_first_expl.push_back(expl.time_to_feasible);
            if (path.outcome == RunOutcome::kOptimal) {
                data.path_optimal_coverage.push_back(path.coverage_at_done);
            }
            data.expl_cov_at_opt.push_back(expl.coverage_at_optimal_found);
        }
    }
    return data;
}

// One-sided sign test: probability of at least `wins` successes out of `n`
// fair coin flips. Small p means "first beats second" is not chance.
double sign_test_p(int wins, int n) {
    if (n == 0) return 1.0;
    double pmf = std::pow(0.5, n);
    double tail = 0.0;
    for (int k = 0; k <= n; ++k) {
        if (k >= wins) tail += pmf;
        pmf *= double(n - k) / double(k + 1);
    }
    return std::min(tail, 1.0);
}

// Paired comparison of possibly-undefined times; an undefined value counts as
// never happening (slower than anything defined). Pairs with neither value
// defined, and exact ties, carry no information and are dropped.
double paired_sign_test(const std::vector<std::optional<double>>& first,
                        const std::vector<std::optional<double>>& second) {
    int wins = 0, n = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        const bool fd = first[i].has_value();
        const bool sd = second[i].has_value();
        if (!fd && !sd) continue;
        if (fd && sd && *first[i] == *second[i]) continue;
        ++n;
        const bool first_wins = fd && (!sd || *first[i] < *second[i]);
        if (first_wins) ++wins;
    }
    return sign_test_p(wins, n);
}

double paired_sign_test(const std::vector<double>& first, const std::vector<double>& second) {
    int wins = 0, n = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        if (first[i] == second[i]) continue;
        ++n;
        if (first[i] < second[i]) ++wins;
    }
    return sign_test_p(wins, n);
}

double defined_mean(const std::vector<std::optional<double>>& values, int* count = nullptr) {
    double sum = 0.0;
    int n = 0;
    for (const auto& v : values) {
        if (v) {
            sum += *v;
            ++n;
        }
    }
    if (count) *count = n;
    return n ? sum / n : std::numeric_limits<double>::quiet_NaN();
}

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return values.empty() ? std::numeric_limits<double>::quiet_NaN() : sum / values.size();
}

Criterion criterion_5(const ComparisonData& d) {
    Criterion c;
    if (!d.error.empty()) {
        c.fail(d.error);
        return c;
    }
    const double p_goal = paired_sign_test(d.tau_opt_path, d.tau_opt_goal);
    const double p_expl = paired_sign_test(d.tau_opt_path, d.tau_opt_expl);
    const double p_done = paired_sign_test(d.tau_done_path, d.tau_done_expl);
    if (p_goal >= kSignTestAlpha) {
        c.fail("optimum-found time, path vs goal-aware: p=" + fmt(p_goal));
    }
    if (p_expl >= kSignTestAlpha) {
        c.fail("optimum-found time, path vs exploration: p=" + fmt(p_expl));
    }
    if (p_done >= kSignTestAlpha) {
        c.fail("completion time, path vs exploration: p=" + fmt(p_done));
    }
    if (c.pass) {
        c.detail = "sign tests: optimum-found p=" + fmt(p_goal) + " (vs goal), p=" + fmt(p_expl) +
                   " (vs exploration); completion p=" + fmt(p_done) +
                   "; mean optimum-found " + fmt(defined_mean(d.tau_opt_path)) + " vs " +
                   fmt(defined_mean(d.tau_opt_expl)) + " s; mean completion " +
                   fmt(mean_of(d.tau_done_path)) + " vs " + fmt(mean_of(d.tau_done_expl)) + " s";
    }
    return c;
}

Criterion criterion_6(const ComparisonData& d) {
    Criterion c;
    if (!d.error.empty()) {
        c.fail(d.error);
        return c;
    }
    int n_path = 0, n_goal = 0, n_expl = 0;
    const double m_path = defined_mean(d.tau_first_path, &n_path);
    const double m_goal = defined_mean(d.tau_first_goal, &n_goal);
    const double m_expl = defined_mean(d.tau_first_expl, &n_expl);
    if (n_path == 0 || n_goal == 0 || n_expl == 0) {
        c.fail("a planner never produced a feasible route");
        return c;
    }
    if (!(m_path < m_expl)) {
        c.fail("path-aware mean time-to-feasible " + fmt(m_path) + " not below exploration " +
               fmt(m_expl));
    }
    if (!(m_goal < m_expl)) {
        c.fail("goal-aware mean time-to-feasible " + fmt(m_goal) + " not below exploration " +
               fmt(m_expl));
    }
    if (c.pass) {
        c.detail = "mean time-to-feasible: path " + fmt(m_path) + " s, goal " + fmt(m_goal) +
                   " s, exploration " + fmt(m_expl) + " s";
    }
    return c;
}

Criterion criterion_7(const ComparisonData& d) {
    Criterion c;
    if (!d.error.empty()) {
        c.fail(d.error);
        return c;
    }
    if (d.path_optimal_coverage.empty()) {
        c.fail("no optimal path-aware runs to evaluate");
        return c;
    }
    const double path_cov = mean_of(d.path_optimal_coverage);
    int n_expl = 0;
    const double expl_cov = defined_mean(d.expl_cov_at_opt, &n_expl);
    if (n_expl == 0) {
        c.fail("exploration never confirmed the optimum");
        return c;
    }
    if (!(path_cov < kC7CoverageMax)) {
        c.fail("path-aware certifies at coverage " + fmt(path_cov) + ", limit " +
               fmt(kC7CoverageMax));
    }
    if (!(path_cov < expl_cov)) {
        c.fail("path-aware coverage " + fmt(path_cov) + " not below exploration's " +
               fmt(expl_cov));
    }
    if (c.pass) {
        c.detail = "coverage at certification: path " + fmt(path_cov) + " vs exploration " +
                   fmt(expl_cov) + " (n=" + std::to_string(n_expl) + ")";
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 8: swapping the exact follower for the sampling one preserves the
// verdicts and stays close on route quality and completion time.

Criterion criterion_8() {
    Criterion c;
    std::vector<double> tau_astar, tau_sampling;
    double worst_gap = 0.0;
    for (int i = 0; i < 10; ++i) {
        GroundTruthScene scene;
        try {
            scene = generate_scene(sweep_spec(4.0, 0.1, 2000 + i));
        } catch (const std::exception& e) {
            c.fail("scene " + std::to_string(i) + ": " + e.what());
            return c;
        }
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const std::string label =
                "follower swap scene " + std::to_string(i) + " seed " + std::to_string(seed);
            RunConfig config;
            config.seed = seed;
            const RunResult exact = simulate(scene, config);
            config.follower = FollowerPlannerKind::kSamplingStar;
            const RunResult sampled = simulate(scene, config);
            check_series(exact, label + " astar");
            check_series(sampled, label + " sampling", /*exact_follower=*/false);

            if (exact.outcome != RunOutcome::kOptimal ||
                sampled.outcome != RunOutcome::kOptimal) {
                c.fail(label + ": outcomes " + std::string(run_outcome_name(exact.outcome)) +
                       " / " + std::string(run_outcome_name(sampled.outcome)));
                continue;
            }
            tau_astar.push_back(*exact.time_to_done);
            tau_sampling.push_back(*sampled.time_to_done);
            const double qa = *exact.metrics.back().feasible_cost;
            const double qs = *sampled.metrics.back().feasible_cost;
            const double gap = std::abs(qs - qa) / qa;
            worst_gap = std::max(worst_gap, gap);
            if (gap > kC8QfTol) {
                c.fail(label + ": final route cost off by " + fmt(gap * 100.0) + "%");
            }
        }
    }
    if (!tau_astar.empty()) {
        const double ma = mean_of(tau_astar);
        const double ms = mean_of(tau_sampling);
        const double drift = std::abs(ms - ma) / ma;
        if (drift > kC8TauTol) {
            c.fail("mean completion time drift " + fmt(drift * 100.0) + "%, limit " +
                   fmt(kC8TauTol * 100.0) + "%");
        }
        if (c.pass) {
            c.detail = "50/50 optimal pairs, worst route-cost gap " + fmt(worst_gap * 100.0) +
                       "%, completion drift " + fmt(drift * 100.0) + "%";
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 9: on fully observed maps the follower planner equals an
// exhaustive independent search across a large random corpus.

Criterion criterion_9() {
    Criterion c;
    std::mt19937_64 rng(20260825);
    std::uniform_int_distribution<int> dim(4, 32);
    std::uniform_real_distribution<double> obstacle(0.0, 0.35);
    int reachable = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int width = dim(rng);
        const int height = dim(rng);
        const GroundTruthScene scene =
            testsupport::random_scene(width, height, 0.5, obstacle(rng), rng);
        const PartialMap map = testsupport::fully_observed(scene);

        const auto planned = plan_feasible(map, scene.start, scene.goal);
        const FeasibleView view(map);
        const auto exhaustive = testsupport::grid_dijkstra(view, scene.start, scene.goal);
        if (planned.has_value() != exhaustive.reachable) {
            c.fail("trial " + std::to_string(trial) + ": reachability disagrees");
            break;
        }
        if (planned) {
            ++reachable;
            if (planned->total_cost != exhaustive.cost) {
                c.fail("trial " + std::to_string(trial) + ": cost " +
                       fmt(planned->total_cost) + " vs exhaustive " + fmt(exhaustive.cost));
                break;
            }
        }
    }
    if (c.pass) {
        c.detail = "1000 maps, " + std::to_string(reachable) + " with routes, all exact";
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 10: repeated campaign invocations of the real command-line tool
// produce byte-identical tables.

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int tool(const std::string& args, const fs::path& dir) {
    const std::string cmd = std::string(TOOL_PATH) + " " + args + " > " +
                            (dir / "tool_log.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
}

Criterion criterion_10() {
    Criterion c;
    const fs::path root = fs::temp_directory_path() / "scoutnav_acceptance_c10";
    fs::remove_all(root);
    fs::create_directories(root);

    const fs::path scene_a = root / "scene_a";
    const fs::path scene_b = root / "scene_b";
    if (tool("generate --out " + scene_a.string() + " --width 24 --height 16 --seed 6", root) !=
            0 ||
        tool("generate --out " + scene_b.string() + " --width 24 --height 16 --seed 7", root) !=
            0) {
        c.fail("scene generation via the tool failed");
        return c;
    }

    const std::string campaign_args = "campaign --scene " + scene_a.string() + " --scene " +
                                      scene_b.string() +
                                      " --planner path_aware --planner exploration --seeds 3";
    const fs::path out1 = root / "camp1";
    const fs::path out2 = root / "camp2";
    const fs::path out3 = root / "camp3";
    if (tool(campaign_args + " --jobs 1 --out " + out1.string(), root) != 0 ||
        tool(campaign_args + " --jobs 1 --out " + out2.string(), root) != 0 ||
        tool(campaign_args + " --jobs 3 --out " + out3.string(), root) != 0) {
        c.fail("campaign invocation failed");
        return c;
    }

    std::vector<std::string> files = {"runs.csv", "summary.csv", "curves.csv"};
    std::size_t run_files = 0;
    for (const auto& entry : fs::directory_iterator(out1 / "runs")) {
        files.push_back("runs/" + entry.path().filename().string());
        ++run_files;
    }
    if (run_files != 12) {
        c.fail("expected 12 per-run tables, found " + std::to_string(run_files));
    }
    for (const std::string& rel : files) {
        const std::string base = slurp(out1 / rel);
        if (base.empty()) {
            c.fail(rel + " is empty");
            continue;
        }
        if (base != slurp(out2 / rel)) {
            c.fail(rel + " differs between identical invocations");
        }
        if (base != slurp(out3 / rel)) {
            c.fail(rel + " depends on the number of jobs");
        }
    }
    if (c.pass) {
        c.detail = "three invocations, " + std::to_string(files.size()) +
                   " files byte-identical";
    }
    return c;
}

}  // namespace

int main() {
    Criterion results[10];
    results[0] = criterion_1();
    results[2] = criterion_3();
    results[3] = criterion_4();
    const ComparisonData comparison = run_comparison_campaign();
    results[4] = criterion_5(comparison);
    results[5] = criterion_6(comparison);
    results[6] = criterion_7(comparison);
    results[7] = criterion_8();
    results[8] = criterion_9();
    results[9] = criterion_10();

    // Criterion 2 aggregates the series checks performed on every run above.
    results[1].pass = g_series_errors == 0 && g_series_runs > 0;
    if (results[1].pass) {
        results[1].detail = std::to_string(g_series_runs) +
                            " runs: bounds monotone, routes only improve, optimal gap zero";
    } else {
        results[1].detail = std::to_string(g_series_errors) + " of " +
                            std::to_string(g_series_runs) +
                            " runs violated series invariants; first: " + g_first_series_error;
    }

    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        const bool pass = results[i].pass;
        failures += pass ? 0 : 1;
        std::cout << "criterion " << (i + 1) << ": " << (pass ? "PASS" : "FAIL");
        if (!results[i].detail.empty()) {
            std::cout << " — " << results[i].detail;
        }
        std::cout << "\n";
    }
    return failures;
}
