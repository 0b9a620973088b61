#include "morphsim/config.hpp"

#include <fstream>
#include <sstream>

namespace morphsim {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream out;
    out << "config validation failed:";
    for (const auto& p : parts) out << "\n  - " << p;
    return out.str();
}

using nlohmann::json;

double get_num(const json& j, const char* key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

Vec3 get_vec3(const json& j, const char* key, const Vec3& fallback) {
    if (!j.contains(key)) return fallback;
    const auto& a = j.at(key);
    if (!a.is_array() || a.size() != 3)
        throw std::domain_error(std::string(key) + " must be an array of 3 numbers");
    return Vec3(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

PidChannel get_pid(const json& j, int index, const PidChannel& fallback) {
    PidChannel ch = fallback;
    if (j.contains("kp")) ch.kp = j.at("kp").at(index).get<double>();
    if (j.contains("ki")) ch.ki = j.at("ki").at(index).get<double>();
    if (j.contains("kd")) ch.kd = j.at("kd").at(index).get<double>();
    return ch;
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& v)
    : std::runtime_error(join(v)), violations(v) {}

FullConfig default_config() {
    return FullConfig{};
}

FullConfig config_from_json(const json& j) {
    FullConfig cfg;
    std::vector<std::string> violations;

    auto section = [&](const char* name, auto&& fn) {
        try {
            fn(j.contains(name) ? j.at(name) : json::object());
        } catch (const std::exception& e) {
            violations.push_back(std::string(name) + ": " + e.what());
        }
    };

    section("mass_model", [&](const json& m) {
        MassModel& mm = cfg.vehicle.mass_model;
        mm.body_mass = get_num(m, "body_mass", mm.body_mass);
        mm.body_dims = get_vec3(m, "body_dims", mm.body_dims);
        mm.arm_mass = get_num(m, "arm_mass", mm.arm_mass);
        mm.arm_dims = get_vec3(m, "arm_dims", mm.arm_dims);
        mm.motor_mass = get_num(m, "motor_mass", mm.motor_mass);
        mm.motor_radius = get_num(m, "motor_radius", mm.motor_radius);
        mm.motor_height = get_num(m, "motor_height", mm.motor_height);
        mm.l_nominal = get_num(m, "l_nominal", mm.l_nominal);
        mm.arm_z_offset = get_num(m, "arm_z_offset", mm.arm_z_offset);
        mm.validate(get_num(m, "total_mass", -1.0));
    });

    section("rotor", [&](const json& r) {
        RotorSet& rp = cfg.vehicle.rotor_params;
        rp.k_f = get_num(r, "k_f", rp.k_f);
        rp.k_m = get_num(r, "k_m", rp.k_m);
        rp.omega_max = get_num(r, "omega_max", rp.omega_max);
        if (!(rp.k_f > 0.0)) throw std::domain_error("k_f must be > 0");
        if (!(rp.k_m > 0.0)) throw std::domain_error("k_m must be > 0");
        if (!(rp.omega_max > 0.0)) throw std::domain_error("omega_max must be > 0");
    });

    section("servo", [&](const json& s) {
        ServoParams& sp = cfg.vehicle.servo;
        sp.omega_n = get_num(s, "omega_n", sp.omega_n);
        sp.zeta = get_num(s, "zeta", sp.zeta);
        sp.d_max = get_num(s, "d_max", sp.d_max);
        sp.rate_max = get_num(s, "rate_max", sp.rate_max);
        sp.validate();
    });

    section("gains", [&](const json& g) {
        ControlGains& cg = cfg.vehicle.gains;
        if (g.contains("position")) {
            const json& p = g.at("position");
            cg.pos_x = get_pid(p, 0, cg.pos_x);
            cg.pos_y = get_pid(p, 1, cg.pos_y);
            cg.pos_z = get_pid(p, 2, cg.pos_z);
        }
        if (g.contains("attitude")) {
            const json& a = g.at("attitude");
            cg.att_roll = get_pid(a, 0, cg.att_roll);
            cg.att_pitch = get_pid(a, 1, cg.att_pitch);
            cg.att_yaw = get_pid(a, 2, cg.att_yaw);
        }
        if (g.contains("arm")) {
            const json& a = g.at("arm");
            cg.arm_roll = get_pid(a, 0, cg.arm_roll);
            cg.arm_pitch = get_pid(a, 1, cg.arm_pitch);
        }
        cg.tilt_max = get_num(g, "tilt_max", cg.tilt_max);
        cg.pos_integral_limit = get_num(g, "pos_integral_limit", cg.pos_integral_limit);
        cg.att_integral_limit = get_num(g, "att_integral_limit", cg.att_integral_limit);
        cg.arm_integral_limit = get_num(g, "arm_integral_limit", cg.arm_integral_limit);
        if (!(cg.tilt_max > 0.0)) throw std::domain_error("tilt_max must be > 0");
    });

    section("mission", [&](const json& m) {
        if (m.empty()) return;  // keep default waypoint mission
        const std::string type = m.value("type", "waypoints");
        if (type == "waypoints") {
            WaypointMission wp = default_waypoints();
            if (m.contains("waypoints")) {
                wp.waypoints.clear();
                for (const auto& w : m.at("waypoints"))
                    wp.waypoints.push_back(Vec3(w[0].get<double>(), w[1].get<double>(),
                                                w[2].get<double>()));
            }
            wp.capture_radius = get_num(m, "capture_radius", wp.capture_radius);
            cfg.sim.mission = wp;
        } else if (type == "figure8") {
            FigureEightMission f8;
            f8.amplitude_x = get_num(m, "amplitude_x", f8.amplitude_x);
            f8.amplitude_y = get_num(m, "amplitude_y", f8.amplitude_y);
            f8.omega = get_num(m, "omega", f8.omega);
            f8.altitude = get_num(m, "altitude", f8.altitude);
            f8.ramp_time = get_num(m, "ramp_time", f8.ramp_time);
            cfg.sim.mission = f8;
        } else {
            throw std::domain_error("unknown mission type: " + type);
        }
        validate_mission(cfg.sim.mission);
    });

    try {
        cfg.sim.dt_physics = get_num(j, "dt_physics", cfg.sim.dt_physics);
        cfg.sim.controller_hz = get_num(j, "controller_hz", cfg.sim.controller_hz);
        cfg.sim.duration = get_num(j, "duration", cfg.sim.duration);
        cfg.sim.noise_deg = get_num(j, "noise_deg", cfg.sim.noise_deg);
        if (j.contains("seed")) cfg.sim.rng_seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("mode")) cfg.sim.mode = mode_from_string(j.at("mode").get<std::string>());
        if (!(cfg.sim.dt_physics > 0.0)) throw std::domain_error("dt_physics must be > 0");
        if (!(cfg.sim.duration > 0.0)) throw std::domain_error("duration must be > 0");
        if (cfg.sim.noise_deg < 0.0) throw std::domain_error("noise_deg must be >= 0");
        cfg.sim.substeps();
    } catch (const std::exception& e) {
        violations.push_back(std::string("sim: ") + e.what());
    }

    if (!violations.empty()) throw ConfigError(violations);
    return cfg;
}

FullConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    json j = json::parse(in);  // parse_error carries byte/line context
    return config_from_json(j);
}

}  // namespace morphsim
