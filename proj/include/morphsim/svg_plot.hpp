#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace morphsim {

// Minimal deterministic SVG line plots: text output, diffable in CI.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel);

    void add_series(std::string label, std::vector<double> xs, std::vector<double> ys);

    std::string render() const;
    void write(const std::filesystem::path& path) const;

private:
    struct Series {
        std::string label;
        std::vector<double> xs, ys;
    };
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
};

}  // namespace morphsim
