#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swarmsim/scenario.hpp"

namespace swarmsim {

namespace {

using nlohmann::json;

/// Collects path-tagged problems while walking the document.
struct Reader {
    std::vector<std::string> errs;

    void reject_unknown(const json& obj, const std::string& path,
                        std::initializer_list<const char*> allowed) {
        for (const auto& [key, _] : obj.items()) {
            bool known = false;
            for (const char* a : allowed) {
                if (key == a) {
                    known = true;
                    break;
                }
            }
            if (!known) errs.push_back(path + ": unknown key '" + key + "'");
        }
    }

    double num(const json& obj, const char* key, double fallback, const std::string& path) {
        if (!obj.contains(key)) return fallback;
        const auto& v = obj.at(key);
        if (!v.is_number()) {
            errs.push_back(path + "." + key + ": expected a number");
            return fallback;
        }
        return v.get<double>();
    }

    std::uint64_t uint(const json& obj, const char* key, std::uint64_t fallback,
                       const std::string& path) {
        if (!obj.contains(key)) return fallback;
        const auto& v = obj.at(key);
        if (!v.is_number_unsigned()) {
            errs.push_back(path + "." + key + ": expected a nonnegative integer");
            return fallback;
        }
        return v.get<std::uint64_t>();
    }

    bool boolean(const json& obj, const char* key, bool fallback, const std::string& path) {
        if (!obj.contains(key)) return fallback;
        const auto& v = obj.at(key);
        if (!v.is_boolean()) {
            errs.push_back(path + "." + key + ": expected a boolean");
            return fallback;
        }
        return v.get<bool>();
    }

    std::string text(const json& obj, const char* key, std::string fallback,
                     const std::string& path) {
        if (!obj.contains(key)) return fallback;
        const auto& v = obj.at(key);
        if (!v.is_string()) {
            errs.push_back(path + "." + key + ": expected a string");
            return fallback;
        }
        return v.get<std::string>();
    }

    Vector3 vec3_value(const json& v, const std::string& path) {
        if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
            !v[2].is_number()) {
            errs.push_back(path + ": expected an array of 3 numbers");
            return {};
        }
        return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }

    Vector3 vec3(const json& obj, const char* key, const Vector3& fallback,
                 const std::string& path) {
        if (!obj.contains(key)) return fallback;
        return vec3_value(obj.at(key), path + "." + key);
    }

    Diag3 diag(const json& obj, const char* key, const Diag3& fallback, const std::string& path) {
        if (!obj.contains(key)) return fallback;
        return {vec3_value(obj.at(key), path + "." + key)};
    }
};

json vec3_to_json(const Vector3& v) { return json::array({v.x, v.y, v.z}); }

} // namespace

ScenarioSpec parse_spec(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError({origin + ": " + e.what()});
    }
    if (!doc.is_object()) throw ValidationError({origin + ": top level must be an object"});

    Reader r;
    ScenarioSpec s;

    r.reject_unknown(doc, origin,
                     {"name", "agents", "duration_s", "dt_s", "mode", "seed", "u_max",
                      "obstacle_avoidance_enabled", "retarget_interval_s", "transition_window_s",
                      "gains", "uav", "barrier", "corridor_half_extents", "buildings",
                      "obstacles", "lloyd", "initial_positions"});

    s.name = r.text(doc, "name", s.name, origin);
    s.agents = static_cast<std::size_t>(r.uint(doc, "agents", s.agents, origin));
    s.duration = r.num(doc, "duration_s", s.duration, origin);
    s.dt = r.num(doc, "dt_s", s.dt, origin);
    s.seed = r.uint(doc, "seed", s.seed, origin);
    s.u_max = r.num(doc, "u_max", s.u_max, origin);
    s.obstacle_avoidance_enabled =
        r.boolean(doc, "obstacle_avoidance_enabled", s.obstacle_avoidance_enabled, origin);
    s.retarget_interval = r.num(doc, "retarget_interval_s", s.retarget_interval, origin);
    s.transition_window = r.num(doc, "transition_window_s", s.transition_window, origin);

    const std::string mode = r.text(doc, "mode", "planar", origin);
    if (mode == "planar") {
        s.mode = ManeuverMode::Planar;
    } else if (mode == "spatial") {
        s.mode = ManeuverMode::Spatial;
    } else {
        r.errs.push_back(origin + ".mode: must be 'planar' or 'spatial'");
    }

    if (doc.contains("gains")) {
        const auto& g = doc.at("gains");
        const std::string path = origin + ".gains";
        if (!g.is_object()) {
            r.errs.push_back(path + ": expected an object");
        } else {
            r.reject_unknown(g, path,
                             {"k_p", "k_v", "k_c1", "k_c2", "k_shape", "k_r", "k_o1", "k_o2"});
            s.gains.k_p = r.diag(g, "k_p", s.gains.k_p, path);
            s.gains.k_v = r.diag(g, "k_v", s.gains.k_v, path);
            s.gains.k_c1 = r.diag(g, "k_c1", s.gains.k_c1, path);
            s.gains.k_c2 = r.diag(g, "k_c2", s.gains.k_c2, path);
            s.gains.k_shape = r.diag(g, "k_shape", s.gains.k_shape, path);
            s.gains.k_r = r.num(g, "k_r", s.gains.k_r, path);
            s.gains.k_o1 = r.num(g, "k_o1", s.gains.k_o1, path);
            s.gains.k_o2 = r.diag(g, "k_o2", s.gains.k_o2, path);
        }
    }

    if (doc.contains("uav")) {
        const auto& u = doc.at("uav");
        const std::string path = origin + ".uav";
        if (!u.is_object()) {
            r.errs.push_back(path + ": expected an object");
        } else {
            r.reject_unknown(u, path, {"r_s", "r_d", "theta_fov_rad"});
            s.uav.r_s = r.num(u, "r_s", s.uav.r_s, path);
            s.uav.r_d = r.num(u, "r_d", s.uav.r_d, path);
            s.uav.theta_fov = r.num(u, "theta_fov_rad", s.uav.theta_fov, path);
        }
    }

    if (doc.contains("barrier")) {
        const auto& b = doc.at("barrier");
        const std::string path = origin + ".barrier";
        if (!b.is_object()) {
            r.errs.push_back(path + ": expected an object");
        } else {
            r.reject_unknown(b, path, {"kind", "center", "half_extents", "velocity"});
            const std::string kind = r.text(b, "kind", "planar", path);
            if (kind == "planar") {
                s.barrier.kind = RegionKind::PlanarBox;
            } else if (kind == "box") {
                s.barrier.kind = RegionKind::Box;
            } else {
                r.errs.push_back(path + ".kind: must be 'planar' or 'box'");
            }
            s.barrier.center = r.vec3(b, "center", s.barrier.center, path);
            s.barrier.half_extents = r.vec3(b, "half_extents", s.barrier.half_extents, path);
            s.barrier.velocity = r.vec3(b, "velocity", s.barrier.velocity, path);
        }
    }

    // Omitted corridor profile means "no squeeze": reuse the barrier's shape.
    s.corridor_half_extents =
        r.vec3(doc, "corridor_half_extents", s.barrier.half_extents, origin);

    if (doc.contains("buildings")) {
        const auto& arr = doc.at("buildings");
        if (!arr.is_array()) {
            r.errs.push_back(origin + ".buildings: expected an array");
        } else {
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string path = origin + ".buildings[" + std::to_string(i) + "]";
                const auto& b = arr[i];
                if (!b.is_object()) {
                    r.errs.push_back(path + ": expected an object");
                    continue;
                }
                r.reject_unknown(b, path, {"lo", "hi"});
                Building box;
                box.lo = r.vec3(b, "lo", {}, path);
                box.hi = r.vec3(b, "hi", {}, path);
                s.buildings.push_back(box);
            }
        }
    }

    if (doc.contains("obstacles")) {
        const auto& arr = doc.at("obstacles");
        if (!arr.is_array()) {
            r.errs.push_back(origin + ".obstacles: expected an array");
        } else {
            for (std::size_t i = 0; i < arr.size(); ++i) {
                const std::string path = origin + ".obstacles[" + std::to_string(i) + "]";
                const auto& o = arr[i];
                if (!o.is_object()) {
                    r.errs.push_back(path + ": expected an object");
                    continue;
                }
                r.reject_unknown(o, path, {"center", "r_ok", "velocity", "activation_s"});
                ObstacleSpec ob;
                ob.center = r.vec3(o, "center", {}, path);
                ob.r_ok = r.num(o, "r_ok", 1.0, path);
                ob.velocity = r.vec3(o, "velocity", {}, path);
                ob.activation_time = r.num(o, "activation_s", 0.0, path);
                s.obstacles.push_back(ob);
            }
        }
    }

    if (doc.contains("lloyd")) {
        const auto& l = doc.at("lloyd");
        const std::string path = origin + ".lloyd";
        if (!l.is_object()) {
            r.errs.push_back(path + ": expected an object");
        } else {
            r.reject_unknown(l, path,
                             {"q_samples", "alpha1", "alpha2", "beta1", "beta2",
                              "max_iterations", "movement_tolerance"});
            s.lloyd.q_samples =
                static_cast<std::size_t>(r.uint(l, "q_samples", s.lloyd.q_samples, path));
            s.lloyd.alpha1 = r.num(l, "alpha1", s.lloyd.alpha1, path);
            s.lloyd.alpha2 = r.num(l, "alpha2", s.lloyd.alpha2, path);
            s.lloyd.beta1 = r.num(l, "beta1", s.lloyd.beta1, path);
            s.lloyd.beta2 = r.num(l, "beta2", s.lloyd.beta2, path);
            s.lloyd.max_iterations = static_cast<std::size_t>(
                r.uint(l, "max_iterations", s.lloyd.max_iterations, path));
            s.lloyd.movement_tolerance =
                r.num(l, "movement_tolerance", s.lloyd.movement_tolerance, path);
        }
    }

    if (doc.contains("initial_positions")) {
        const auto& arr = doc.at("initial_positions");
        const std::string path = origin + ".initial_positions";
        if (!arr.is_array()) {
            r.errs.push_back(path + ": expected an array of [x, y, z] triples");
        } else {
            std::vector<Vector3> pts;
            for (std::size_t i = 0; i < arr.size(); ++i) {
                pts.push_back(r.vec3_value(arr[i], path + "[" + std::to_string(i) + "]"));
            }
            s.initial_positions = std::move(pts);
        }
    }

    s.lloyd.count = s.agents;
    auto violations = s.validate();
    violations.insert(violations.begin(), r.errs.begin(), r.errs.end());
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return s;
}

ScenarioSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError({path + ": cannot open file"});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), path);
}

std::string spec_to_json(const ScenarioSpec& spec) {
    json doc;
    doc["name"] = spec.name;
    doc["agents"] = spec.agents;
    doc["duration_s"] = spec.duration;
    doc["dt_s"] = spec.dt;
    doc["mode"] = spec.mode == ManeuverMode::Planar ? "planar" : "spatial";
    doc["seed"] = spec.seed;
    doc["u_max"] = spec.u_max;
    doc["obstacle_avoidance_enabled"] = spec.obstacle_avoidance_enabled;
    doc["retarget_interval_s"] = spec.retarget_interval;
    doc["transition_window_s"] = spec.transition_window;

    doc["gains"] = {
        {"k_p", vec3_to_json(spec.gains.k_p.d)},   {"k_v", vec3_to_json(spec.gains.k_v.d)},
        {"k_c1", vec3_to_json(spec.gains.k_c1.d)}, {"k_c2", vec3_to_json(spec.gains.k_c2.d)},
        {"k_shape", vec3_to_json(spec.gains.k_shape.d)},
        {"k_r", spec.gains.k_r},                   {"k_o1", spec.gains.k_o1},
        {"k_o2", vec3_to_json(spec.gains.k_o2.d)},
    };
    doc["uav"] = {
        {"r_s", spec.uav.r_s},
        {"r_d", spec.uav.r_d},
        {"theta_fov_rad", spec.uav.theta_fov},
    };
    doc["barrier"] = {
        {"kind", spec.barrier.kind == RegionKind::PlanarBox ? "planar" : "box"},
        {"center", vec3_to_json(spec.barrier.center)},
        {"half_extents", vec3_to_json(spec.barrier.half_extents)},
        {"velocity", vec3_to_json(spec.barrier.velocity)},
    };
    doc["corridor_half_extents"] = vec3_to_json(spec.corridor_half_extents);

    doc["buildings"] = json::array();
    for (const auto& b : spec.buildings) {
        doc["buildings"].push_back({{"lo", vec3_to_json(b.lo)}, {"hi", vec3_to_json(b.hi)}});
    }
    doc["obstacles"] = json::array();
    for (const auto& o : spec.obstacles) {
        doc["obstacles"].push_back({{"center", vec3_to_json(o.center)},
                                    {"r_ok", o.r_ok},
                                    {"velocity", vec3_to_json(o.velocity)},
                                    {"activation_s", o.activation_time}});
    }
    doc["lloyd"] = {
        {"q_samples", spec.lloyd.q_samples},
        {"alpha1", spec.lloyd.alpha1},
        {"alpha2", spec.lloyd.alpha2},
        {"beta1", spec.lloyd.beta1},
        {"beta2", spec.lloyd.beta2},
        {"max_iterations", spec.lloyd.max_iterations},
        {"movement_tolerance", spec.lloyd.movement_tolerance},
    };
    if (spec.initial_positions) {
        doc["initial_positions"] = json::array();
        for (const auto& p : *spec.initial_positions) {
            doc["initial_positions"].push_back(vec3_to_json(p));
        }
    }
    return doc.dump(2) + "\n";
}

} // namespace swarmsim
