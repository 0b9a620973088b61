#include "morphsim/telemetry.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace morphsim {

namespace {

constexpr const char* kHeader =
    "t,x,y,z,u,v,w,phi,theta,psi,p,q,r,w1,w2,w3,w4,dx,dy,dx_cmd,dy_cmd,xd,yd,zd";

void append_field(std::string& line, double v, bool first = false) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    if (!first) line += ',';
    line += buf;
}

}  // namespace

void write_telemetry_csv(const std::vector<TelemetryRecord>& records, std::ostream& out) {
    out << kHeader << '\n';
    std::string line;
    for (const TelemetryRecord& r : records) {
        line.clear();
        append_field(line, r.t, true);
        for (int i = 0; i < 3; ++i) append_field(line, r.pos[i]);
        for (int i = 0; i < 3; ++i) append_field(line, r.vel_body[i]);
        for (int i = 0; i < 3; ++i) append_field(line, r.euler[i]);
        for (int i = 0; i < 3; ++i) append_field(line, r.rates[i]);
        for (int i = 0; i < 4; ++i) append_field(line, r.omega[i]);
        append_field(line, r.dx);
        append_field(line, r.dy);
        append_field(line, r.dx_cmd);
        append_field(line, r.dy_cmd);
        for (int i = 0; i < 3; ++i) append_field(line, r.target[i]);
        out << line << '\n';
    }
}

void write_telemetry_csv(const std::vector<TelemetryRecord>& records,
                         const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_telemetry_csv(records, out);
}

std::string telemetry_csv_string(const std::vector<TelemetryRecord>& records) {
    std::ostringstream out;
    write_telemetry_csv(records, out);
    return out.str();
}

nlohmann::json summary_to_json(const MissionSummary& s) {
    return nlohmann::json{
        {"completed", s.completed},
        {"waypoints_captured", s.waypoints_captured},
        {"arrival_times", s.arrival_times},
        {"rms_tracking_error", s.rms_tracking_error},
        {"rms_lateral_error", s.rms_lateral_error},
        {"max_abs_dx", s.max_abs_dx},
        {"max_abs_dy", s.max_abs_dy},
        {"max_tilt", s.max_tilt},
        {"peak_tilt_sum", s.peak_tilt_sum},
    };
}

}  // namespace morphsim
