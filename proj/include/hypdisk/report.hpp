#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypdisk/scene.hpp"

namespace hypdisk {

// Ordered key/value document; printed one "key = value" per line. Every
// number is recomputed from the scene on each call, nothing is cached.
struct Report {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    std::string text() const;
    std::string json() const;
};

std::string format_number(double value); // 15 significant digits

Report hexagon_report(const std::array<double, 6>& angles_deg, const SizeVector& sizes,
                      double tol);

// theta6_deg is the solved angle when the scene had only five; pass the sixth
// chain angle otherwise.
Report chain_report(const std::array<double, 6>& angles_deg, double s1, double tol);

} // namespace hypdisk
