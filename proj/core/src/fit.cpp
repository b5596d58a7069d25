#include "ratcycle/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratcycle {

namespace {

double sum_squares(const std::vector<std::pair<double, double>>& pts, double total,
                   double c1, double c2) {
    double s = 0;
    for (const auto& [n, a] : pts) {
        double r = a - c1 - (total - c1) * std::exp(-c2 * n);
        s += r * r;
    }
    return s;
}

}  // namespace

std::pair<double, double> fit_exponential(
    const std::vector<std::pair<double, double>>& points, double total) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
    bool degenerate = std::all_of(points.begin(), points.end(), [&](const auto& p) {
        return p.first == points.front().first;
    });
    if (degenerate) throw std::invalid_argument("all points share one depth");

    constexpr int kSteps = 40;
    double lo1 = 0, hi1 = total, lo2 = 0, hi2 = 1;
    double best1 = 0, best2 = 0, best = HUGE_VAL;
    for (int iter = 0; iter < 60; ++iter) {
        for (int i = 0; i <= kSteps; ++i) {
            double c1 = lo1 + (hi1 - lo1) * i / kSteps;
            for (int j = 0; j <= kSteps; ++j) {
                double c2 = lo2 + (hi2 - lo2) * j / kSteps;
                double s = sum_squares(points, total, c1, c2);
                if (s < best) {
                    best = s;
                    best1 = c1;
                    best2 = c2;
                }
            }
        }
        double w1 = (hi1 - lo1) * 0.25;
        double w2 = (hi2 - lo2) * 0.25;
        lo1 = std::max(0.0, best1 - w1);
        hi1 = std::min(total, best1 + w1);
        lo2 = std::max(0.0, best2 - w2);
        hi2 = std::min(1.0, best2 + w2);
        if (w1 <= 1e-7 * std::max(1.0, std::abs(best1)) &&
            w2 <= 1e-7 * std::max(1e-3, std::abs(best2)))
            break;
    }
    return {best1, best2};
}

std::pair<double, double> fit_exponential(const std::vector<ATablePoint>& points,
                                          double total) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        pts.emplace_back(static_cast<double>(p.depth),
                         static_cast<double>(p.single_attractor_count));
    return fit_exponential(pts, total);
}

}  // namespace ratcycle
