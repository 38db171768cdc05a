#include <mmsim/config.hpp>

#include <mmsim/errors.hpp>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <fmt/format.h>

#include <fstream>
#include <set>
#include <sstream>

#ifndef MMSIM_VERSION
#define MMSIM_VERSION "unknown"
#endif

namespace mmsim {

namespace {

int line_of(const YAML::Node &node) {
    return node.Mark().line + 1;
}

[[noreturn]] void parse_fail(const YAML::Node &node, const std::string &msg) {
    throw ParseError(fmt::format("line {}: {}", line_of(node), msg));
}

[[noreturn]] void invalid(const YAML::Node &node, const std::string &section, const std::string &msg) {
    throw ValidationError(fmt::format("line {} ({}): {}", line_of(node), section, msg));
}

void require_map(const YAML::Node &node, const std::string &name) {
    if (!node.IsMap()) {
        parse_fail(node, "section '" + name + "' must be a mapping");
    }
}

void reject_unknown(const YAML::Node &node, const std::string &section, const std::set<std::string> &allowed) {
    for (const auto &kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.contains(key)) {
            parse_fail(kv.first, "unknown key '" + key + "' in section '" + section + "'");
        }
    }
}

template <typename T> T scalar(const YAML::Node &node, const std::string &key) {
    if (!node.IsScalar()) {
        parse_fail(node, "'" + key + "' must be a scalar");
    }
    try {
        return node.as<T>();
    } catch (const YAML::Exception &) {
        parse_fail(node, "'" + key + "' has an invalid value '" + node.Scalar() + "'");
    }
}

double required(const YAML::Node &section, const std::string &name, const std::string &key) {
    const YAML::Node node = section[key];
    if (!node) {
        parse_fail(section, "missing required key '" + key + "' in section '" + name + "'");
    }
    return scalar<double>(node, key);
}

double optional_or(const YAML::Node &section, const std::string &key, double fallback) {
    const YAML::Node node = section[key];
    return node ? scalar<double>(node, key) : fallback;
}

template <int N> Eigen::Matrix<double, N, 1> vector_of(const YAML::Node &node, const std::string &key) {
    if (!node.IsSequence() || node.size() != N) {
        parse_fail(node, fmt::format("'{}' must be a list of {} numbers", key, N));
    }
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) {
        out(i) = scalar<double>(node[i], key);
    }
    return out;
}

RemusSourceValues parse_vehicle(const YAML::Node &node) {
    require_map(node, "vehicle");
    reject_unknown(node, "vehicle",
                   {"total_mass", "moving_mass_fraction", "semi_axes", "added_mass", "rho", "gravity",
                    "displaced_volume"});
    RemusSourceValues s;
    s.total_mass = required(node, "vehicle", "total_mass");
    s.moving_mass_fraction = optional_or(node, "moving_mass_fraction", s.moving_mass_fraction);
    s.rho = required(node, "vehicle", "rho");
    s.gravity = optional_or(node, "gravity", s.gravity);
    if (node["displaced_volume"]) {
        s.displaced_volume = scalar<double>(node["displaced_volume"], "displaced_volume");
    }

    const YAML::Node axes = node["semi_axes"];
    if (!axes) {
        parse_fail(node, "missing required key 'semi_axes' in section 'vehicle'");
    }
    require_map(axes, "vehicle.semi_axes");
    reject_unknown(axes, "vehicle.semi_axes", {"a", "b"});
    s.semi_axes = {required(axes, "vehicle.semi_axes", "a"), required(axes, "vehicle.semi_axes", "b")};

    const YAML::Node added = node["added_mass"];
    if (!added) {
        parse_fail(node, "missing required key 'added_mass' in section 'vehicle'");
    }
    require_map(added, "vehicle.added_mass");
    reject_unknown(added, "vehicle.added_mass", {"X_udot", "Y_vdot", "Z_wdot", "K_pdot", "M_qdot", "N_rdot"});
    s.X_udot = required(added, "vehicle.added_mass", "X_udot");
    s.Y_vdot = required(added, "vehicle.added_mass", "Y_vdot");
    s.Z_wdot = required(added, "vehicle.added_mass", "Z_wdot");
    s.K_pdot = required(added, "vehicle.added_mass", "K_pdot");
    s.M_qdot = required(added, "vehicle.added_mass", "M_qdot");
    s.N_rdot = required(added, "vehicle.added_mass", "N_rdot");
    return s;
}

ScenarioSpec parse_scenario(const YAML::Node &node) {
    require_map(node, "scenario");
    reject_unknown(node, "scenario",
                   {"duration", "dt", "surge_force", "mass_force", "depth_deep", "depth_shallow", "rail", "initial"});
    ScenarioSpec spec = remus_scenario();
    spec.duration = required(node, "scenario", "duration");
    spec.dt = required(node, "scenario", "dt");
    spec.surge_force = required(node, "scenario", "surge_force");
    spec.mass_force_magnitude = required(node, "scenario", "mass_force");
    spec.depth_deep = required(node, "scenario", "depth_deep");
    spec.depth_shallow = required(node, "scenario", "depth_shallow");

    const YAML::Node rail = node["rail"];
    if (!rail) {
        parse_fail(node, "missing required key 'rail' in section 'scenario'");
    }
    require_map(rail, "scenario.rail");
    reject_unknown(rail, "scenario.rail", {"origin", "axis", "stroke_min", "stroke_max"});
    for (const char *key : {"origin", "axis"}) {
        if (!rail[key]) {
            parse_fail(rail, std::string("missing required key '") + key + "' in section 'scenario.rail'");
        }
    }
    spec.rail.origin = vector_of<3>(rail["origin"], "origin");
    spec.rail.axis = vector_of<3>(rail["axis"], "axis");
    spec.rail.stroke_min = required(rail, "scenario.rail", "stroke_min");
    spec.rail.stroke_max = required(rail, "scenario.rail", "stroke_max");

    spec.initial_state = SimState{};
    spec.initial_state.r_p = spec.rail.origin;
    if (const YAML::Node init = node["initial"]) {
        require_map(init, "scenario.initial");
        reject_unknown(init, "scenario.initial", {"position", "attitude", "nu", "rail_offset"});
        if (init["position"]) {
            spec.initial_state.eta.position = vector_of<3>(init["position"], "position");
        }
        if (init["attitude"]) {
            const Vec3 att = vector_of<3>(init["attitude"], "attitude");
            spec.initial_state.eta.attitude = {att(0), att(1), att(2)};
        }
        if (init["nu"]) {
            spec.initial_state.nu = vector_of<6>(init["nu"], "nu");
        }
        const double offset = optional_or(init, "rail_offset", 0.0);
        spec.initial_state.r_p = spec.rail.origin + offset * spec.rail.axis;
        spec.initial_state.v_p = spec.initial_state.nu.head<3>() +
                                 spec.initial_state.nu.tail<3>().cross(spec.initial_state.r_p);
    }
    return spec;
}

} // namespace

RunConfig parse_config(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException &e) {
        throw ParseError(fmt::format("line {}: {}", e.mark.line + 1, e.msg));
    }
    if (!root.IsMap()) {
        throw ParseError("line 1: configuration must be a mapping with sections vehicle, scenario, run");
    }
    reject_unknown(root, "<root>", {"vehicle", "scenario", "run"});
    for (const char *section : {"vehicle", "scenario"}) {
        if (!root[section]) {
            throw ParseError(fmt::format("line 1: missing required section '{}'", section));
        }
    }

    RunConfig cfg;
    cfg.vehicle_source = parse_vehicle(root["vehicle"]);
    cfg.scenario = parse_scenario(root["scenario"]);

    if (const YAML::Node run = root["run"]) {
        require_map(run, "run");
        reject_unknown(run, "run", {"formulation", "output", "decimation", "seed"});
        if (run["formulation"]) {
            try {
                cfg.formulation = parse_formulation(scalar<std::string>(run["formulation"], "formulation"));
            } catch (const ValidationError &e) {
                invalid(run["formulation"], "run", e.what());
            }
        }
        if (run["output"]) {
            cfg.output_path = scalar<std::string>(run["output"], "output");
        }
        if (run["decimation"]) {
            cfg.decimation = scalar<int>(run["decimation"], "decimation");
            if (cfg.decimation < 1) {
                invalid(run["decimation"], "run", "decimation must be a positive integer");
            }
        }
        if (run["seed"]) {
            cfg.seed = scalar<std::uint64_t>(run["seed"], "seed");
        }
    }

    try {
        cfg.vehicle = remus_params(cfg.vehicle_source);
        cfg.warnings = validate(cfg.vehicle);
    } catch (const Error &e) {
        invalid(root["vehicle"], "vehicle", e.what());
    }
    cfg.volume_derived = !cfg.vehicle_source.displaced_volume.has_value();
    if (cfg.volume_derived) {
        cfg.warnings.push_back(
            fmt::format("displaced_volume derived as {:.17g} m^3 for neutral buoyancy", cfg.vehicle.displaced_volume));
    }
    try {
        cfg.scenario.validate();
    } catch (const ValidationError &e) {
        invalid(root["scenario"], "scenario", e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string content_hash(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

namespace {

nlohmann::json to_json(const Vec3 &v) {
    return {v(0), v(1), v(2)};
}

Vec3 vec3_from(const nlohmann::json &j) {
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

nlohmann::json to_json(const Mat3 &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 3; ++r) {
        rows.push_back(to_json(Vec3(m.row(r).transpose())));
    }
    return rows;
}

Mat3 mat3_from(const nlohmann::json &j) {
    Mat3 m;
    for (int r = 0; r < 3; ++r) {
        m.row(r) = vec3_from(j.at(r)).transpose();
    }
    return m;
}

} // namespace

std::string serialize_params(const VehicleParams &p) {
    nlohmann::json j;
    j["m_s"] = p.m_s;
    j["m_p"] = p.m_p;
    j["r_s"] = to_json(p.r_s);
    j["I_g"] = to_json(p.I_g);
    j["added_linear"] = to_json(p.added_linear);
    j["added_angular"] = to_json(p.added_angular);
    j["added_coupling"] = to_json(p.added_coupling);
    j["rho"] = p.rho;
    j["displaced_volume"] = p.displaced_volume;
    j["gravity"] = p.gravity;
    if (p.semi_axes) {
        j["semi_axes"] = {{"a", p.semi_axes->a}, {"b", p.semi_axes->b}};
    }
    return j.dump(2);
}

VehicleParams parse_params(std::string_view json_text) {
    try {
        const auto j = nlohmann::json::parse(json_text);
        VehicleParams p;
        p.m_s = j.at("m_s").get<double>();
        p.m_p = j.at("m_p").get<double>();
        p.r_s = vec3_from(j.at("r_s"));
        p.I_g = mat3_from(j.at("I_g"));
        p.added_linear = vec3_from(j.at("added_linear"));
        p.added_angular = vec3_from(j.at("added_angular"));
        p.added_coupling = mat3_from(j.at("added_coupling"));
        p.rho = j.at("rho").get<double>();
        p.displaced_volume = j.at("displaced_volume").get<double>();
        p.gravity = j.at("gravity").get<double>();
        if (j.contains("semi_axes")) {
            p.semi_axes = SemiAxes{j["semi_axes"].at("a").get<double>(), j["semi_axes"].at("b").get<double>()};
        }
        return p;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("vehicle parameters: ") + e.what());
    }
}

std::string_view code_version() {
    return MMSIM_VERSION;
}

} // namespace mmsim
