#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "morphsim/simulation.hpp"

namespace morphsim {

// CSV columns, exactly:
// t,x,y,z,u,v,w,phi,theta,psi,p,q,r,w1,w2,w3,w4,dx,dy,dx_cmd,dy_cmd,xd,yd,zd
void write_telemetry_csv(const std::vector<TelemetryRecord>& records, std::ostream& out);
void write_telemetry_csv(const std::vector<TelemetryRecord>& records,
                         const std::filesystem::path& path);
std::string telemetry_csv_string(const std::vector<TelemetryRecord>& records);

nlohmann::json summary_to_json(const MissionSummary& summary);

}  // namespace morphsim
