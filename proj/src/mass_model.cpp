#include "morphsim/mass_model.hpp"

#include <cmath>
#include <sstream>

namespace morphsim {

void MassModel::validate(double expected_total) const {
    std::ostringstream bad;
    auto positive = [&](double v, const char* name) {
        if (!(v > 0.0)) bad << name << " must be > 0; ";
    };
    positive(body_mass, "body_mass");
    positive(arm_mass, "arm_mass");
    positive(motor_mass, "motor_mass");
    positive(motor_radius, "motor_radius");
    positive(motor_height, "motor_height");
    positive(l_nominal, "l_nominal");
    for (int i = 0; i < 3; ++i) {
        positive(body_dims[i], "body_dims");
        positive(arm_dims[i], "arm_dims");
    }
    if (std::abs(arm_dims[0] - 2.0 * l_nominal) > 1e-12 * std::max(1.0, 2.0 * l_nominal))
        bad << "arm_dims.length must equal 2*l_nominal; ";
    if (expected_total > 0.0) {
        double total = total_mass();
        if (std::abs(total - expected_total) > 1e-12 * expected_total)
            bad << "component masses sum to " << total << ", expected " << expected_total << "; ";
    }
    std::string msg = bad.str();
    if (!msg.empty()) throw std::domain_error("mass_model: " + msg);
}

}  // namespace morphsim
