#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "manifest.hpp"
#include "svg_plot.hpp"
#include "swarmsim/engine.hpp"
#include "swarmsim/log_io.hpp"
#include "swarmsim/scenario.hpp"
#include "swarmsim/series.hpp"

namespace swarmsim::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool parse_index(const std::string& part, std::size_t& out) {
    if (part.empty()) return false;
    const char* first = part.data();
    const char* last = first + part.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

/// Set doc[dotted.path] = value, creating intermediate objects on demand.
/// Array hops use numeric components and must stay in range.
void apply_override(json& doc, const std::string& raw) {
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw std::runtime_error("override must look like path.to.key=value: " + raw);
    }
    const std::string key = raw.substr(0, eq);
    const std::string value = raw.substr(eq + 1);

    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = key.find('.', start);
        parts.push_back(key.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    for (const std::string& p : parts) {
        if (p.empty()) throw std::runtime_error("override path has an empty component: " + raw);
    }

    json* cur = &doc;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (cur->is_array()) {
            std::size_t idx = 0;
            if (!parse_index(p, idx)) {
                throw std::runtime_error("override path component '" + p +
                                         "' must be an array index: " + raw);
            }
            if (idx >= cur->size()) {
                throw std::runtime_error("override array index " + p + " out of range: " + raw);
            }
            cur = &(*cur)[idx];
        } else if (cur->is_object() || cur->is_null()) {
            if (cur->is_null()) *cur = json::object();
            cur = &(*cur)[p];
        } else {
            throw std::runtime_error("override path descends into a scalar at '" + p +
                                     "': " + raw);
        }
    }

    json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) parsed = value;  // bare words are strings

    const std::string& leaf = parts.back();
    if (cur->is_array()) {
        std::size_t idx = 0;
        if (!parse_index(leaf, idx)) {
            throw std::runtime_error("override path component '" + leaf +
                                     "' must be an array index: " + raw);
        }
        if (idx >= cur->size()) {
            throw std::runtime_error("override array index " + leaf + " out of range: " + raw);
        }
        (*cur)[idx] = parsed;
    } else if (cur->is_object() || cur->is_null()) {
        if (cur->is_null()) *cur = json::object();
        (*cur)[leaf] = parsed;
    } else {
        throw std::runtime_error("override path descends into a scalar at '" + leaf +
                                 "': " + raw);
    }
}

struct Resolved {
    ScenarioSpec spec;
    std::string origin;     ///< "case:N" or the file path
    std::string canonical;  ///< canonical spec JSON, the hash input
};

Resolved resolve_spec(const Options& opt) {
    std::string origin;
    std::string text;
    if (opt.case_id != 0) {
        origin = "case:" + std::to_string(opt.case_id);
        text = spec_to_json(build_case(opt.case_id));
    } else if (!opt.scenario_path.empty()) {
        origin = opt.scenario_path;
        text = slurp(opt.scenario_path);
    } else {
        throw std::runtime_error("no scenario given: pass --case or --scenario");
    }

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    for (const std::string& ov : opt.overrides) apply_override(doc, ov);

    Resolved r;
    r.spec = parse_spec(doc.dump(), origin);
    r.origin = origin;
    r.canonical = spec_to_json(r.spec);
    return r;
}

std::size_t count_events(const std::vector<Event>& events, EventKind kind) {
    std::size_t n = 0;
    for (const Event& e : events)
        if (e.kind == kind) ++n;
    return n;
}

void update_manifest(const Resolved& rs, const Options& opt, std::uint64_t seed,
                     std::vector<std::string> files) {
    RunManifest m;
    m.scenario = rs.origin;
    m.seed = seed;
    m.out_dir = opt.out_dir;
    m.files = std::move(files);
    m.spec_hash = fnv1a64_hex(rs.canonical);
    merge_existing_files(m);
    write_manifest(m);
}

/// Global minimum of one clearance column class (spheres or buildings)
/// across all agents, with where and when it happened.
struct ClearanceMin {
    double value = std::numeric_limits<double>::infinity();
    double time = 0.0;
    std::size_t agent = 0;
};

void scan_clearances(const TrajectoryLog& log, const ScenarioSpec& spec, ClearanceMin& sphere,
                     ClearanceMin& building, bool& any_inside) {
    const std::size_t n_obs = spec.obstacles.size();
    for (std::size_t i = 0; i < log.agent_count; ++i) {
        const ClearanceSeries c = clearance_series(log, spec, i);
        any_inside = any_inside || c.any_inside_building;
        for (std::size_t k = 0; k < c.clearance.size(); ++k) {
            const std::vector<double>& row = c.clearance[k];
            for (std::size_t j = 0; j < row.size(); ++j) {
                ClearanceMin& slot = j < n_obs ? sphere : building;
                if (row[j] < slot.value) {
                    slot.value = row[j];
                    slot.time = c.time[k];
                    slot.agent = i;
                }
            }
        }
    }
}

}  // namespace

int cmd_run(const Options& opt) {
    const Resolved rs = resolve_spec(opt);
    const std::uint64_t seed = opt.seed_given ? opt.seed : rs.spec.seed;
    const TrajectoryLog log = run_simulation(rs.spec, seed);

    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    write_trajectory_csv((dir / "trajectory.csv").string(), log);
    write_events_csv((dir / "events.csv").string(), log.events);
    update_manifest(rs, opt, seed, {"events.csv", "trajectory.csv"});

    std::cout << "scenario: " << rs.origin << "  seed: " << seed << '\n';
    std::cout << "records: " << log.records.size() << "  agents: " << log.agent_count
              << "  duration: " << fmt_g(log.records.back().time) << " s\n";
    if (log.agent_count >= 2) {
        const SwarmSeparationSeries sep = swarm_separation_series(log);
        std::cout << "min pairwise distance: " << fmt_g(sep.global_min) << " m at t = "
                  << fmt_g(sep.global_min_time) << " s\n";
    } else {
        std::cout << "min pairwise distance: n/a (single agent)\n";
    }
    if (!rs.spec.obstacles.empty() || !rs.spec.buildings.empty()) {
        ClearanceMin sphere, building;
        bool any_inside = false;
        scan_clearances(log, rs.spec, sphere, building, any_inside);
        const double overall = std::min(sphere.value, building.value);
        std::cout << "min obstacle clearance: " << fmt_g(overall) << " m\n";
        if (any_inside) std::cout << "WARNING: an agent entered a building volume\n";
    } else {
        std::cout << "min obstacle clearance: n/a (no obstacles or buildings)\n";
    }
    std::cout << "safety violations: " << count_events(log.events, EventKind::SafetyViolation)
              << '\n';
    for (const char* f : {"trajectory.csv", "events.csv", "manifest.json"}) {
        std::cout << "wrote " << (dir / f).string() << '\n';
    }
    return 0;
}

int cmd_metrics(const Options& opt) {
    const Resolved rs = resolve_spec(opt);
    const fs::path dir(opt.out_dir);
    const fs::path traj = dir / "trajectory.csv";
    if (!fs::exists(traj)) {
        throw std::runtime_error("missing trajectory log: " + traj.string());
    }
    const TrajectoryLog log = read_trajectory_csv(traj.string());
    if (opt.ref_agent >= log.agent_count) {
        throw std::runtime_error("--ref-agent " + std::to_string(opt.ref_agent) +
                                 " out of range: the log has " +
                                 std::to_string(log.agent_count) + " agents");
    }

    json report;
    report["scenario"] = rs.origin;
    report["name"] = rs.spec.name;
    report["agents"] = log.agent_count;
    report["records"] = log.records.size();
    report["dt_s"] = log.dt;
    report["end_time_s"] = log.records.back().time;

    if (log.agent_count < 2) {
        report["distance"] = {{"note", "single agent: no pairwise distances"}};
    } else {
        const MinDistanceSeries md = min_distance_series(log, opt.ref_agent);
        const SwarmSeparationSeries sep = swarm_separation_series(log);
        report["distance"] = {
            {"reference_agent", opt.ref_agent},
            {"min_to_reference_m", md.global_min},
            {"min_to_reference_at_s", md.global_min_time},
            {"final_min_to_reference_m", md.min_distance.back()},
            {"swarm_min_pairwise_m", sep.global_min},
            {"swarm_min_pairwise_at_s", sep.global_min_time},
        };
    }

    if (rs.spec.obstacles.empty() && rs.spec.buildings.empty()) {
        report["clearance"] = {{"note", "no obstacles or buildings in the scenario"}};
    } else {
        ClearanceMin sphere, building;
        bool any_inside = false;
        scan_clearances(log, rs.spec, sphere, building, any_inside);
        json cl;
        if (!rs.spec.obstacles.empty()) {
            cl["min_sphere_clearance_m"] = sphere.value;
            cl["min_sphere_clearance_at_s"] = sphere.time;
            cl["min_sphere_clearance_agent"] = sphere.agent;
        }
        if (!rs.spec.buildings.empty()) {
            cl["min_building_clearance_m"] = building.value;
            cl["min_building_clearance_at_s"] = building.time;
            cl["min_building_clearance_agent"] = building.agent;
            cl["any_agent_inside_building"] = any_inside;
        }
        report["clearance"] = cl;
    }

    json phases = json::array();
    for (std::size_t k = 0; k < log.records.size(); ++k) {
        const char* name = phase_name(log.records[k].phase);
        if (phases.empty() || phases.back()["phase"] != name) {
            phases.push_back({{"phase", name},
                              {"enter_s", log.records[k].time},
                              {"ticks", 1}});
        } else {
            phases.back()["ticks"] = phases.back()["ticks"].get<std::int64_t>() + 1;
        }
    }
    for (json& seg : phases) {
        seg["span_s"] = static_cast<double>(seg["ticks"].get<std::int64_t>()) * log.dt;
    }
    report["phases"] = phases;

    const fs::path ev = dir / "events.csv";
    if (fs::exists(ev)) {
        const std::vector<Event> events = read_events_csv(ev.string());
        report["safety_violations"] = count_events(events, EventKind::SafetyViolation);
        report["phase_changes"] = count_events(events, EventKind::PhaseChange);
    } else {
        report["safety_violations"] = nullptr;  // no events log next to the trajectory
    }

    const std::string text = report.dump(2) + "\n";
    const fs::path out = dir / "metrics.json";
    {
        std::ofstream os(out, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + out.string());
        os << text;
    }
    update_manifest(rs, opt, opt.seed_given ? opt.seed : rs.spec.seed,
                    {"metrics.json"});
    std::cout << text;
    std::cout << "wrote " << out.string() << '\n';
    return 0;
}

int cmd_plot(const Options& opt) {
    const Resolved rs = resolve_spec(opt);
    const fs::path dir(opt.out_dir);
    const fs::path traj = dir / "trajectory.csv";
    if (!fs::exists(traj)) {
        throw std::runtime_error("missing trajectory log: " + traj.string());
    }
    const TrajectoryLog log = read_trajectory_csv(traj.string());
    if (opt.ref_agent >= log.agent_count) {
        throw std::runtime_error("--ref-agent " + std::to_string(opt.ref_agent) +
                                 " out of range: the log has " +
                                 std::to_string(log.agent_count) + " agents");
    }

    fs::create_directories(dir);
    std::vector<std::string> files;

    const std::string plan = plan_view_svg(log, rs.spec);
    {
        std::ofstream os(dir / "plan_view.svg", std::ios::binary | std::ios::trunc);
        os << plan;
    }
    files.push_back("plan_view.svg");

    if (log.agent_count >= 2) {
        const MinDistanceSeries md = min_distance_series(log, opt.ref_agent);
        const std::string dist = distance_svg(md, opt.ref_agent, rs.spec.name);
        std::ofstream os(dir / "distance.svg", std::ios::binary | std::ios::trunc);
        os << dist;
        files.push_back("distance.svg");
    } else {
        std::cout << "single agent: skipping the distance figure\n";
    }

    if (rs.spec.mode == ManeuverMode::Spatial) {
        const std::string alt = altitude_svg(log, rs.spec.barrier.center.z, rs.spec.name);
        std::ofstream os(dir / "altitude.svg", std::ios::binary | std::ios::trunc);
        os << alt;
        files.push_back("altitude.svg");
    }

    update_manifest(rs, opt, opt.seed_given ? opt.seed : rs.spec.seed, files);
    for (const std::string& f : files) std::cout << "wrote " << (dir / f).string() << '\n';
    return 0;
}

}  // namespace swarmsim::cli
