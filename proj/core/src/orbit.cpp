#include "ratcycle/orbit.hpp"

#include <algorithm>
#include <unordered_map>

namespace ratcycle {

OrbitOutcome orbit(const Rational2& x, std::uint64_t max_steps) {
    OrbitOutcome out;
    std::vector<Rational2> traj;
    std::unordered_map<Rational2, std::size_t, Rational2Hash> seen;
    traj.push_back(x);
    seen.emplace(x, 0);
    Rational2 cur = x;
    for (std::uint64_t step = 1; step <= max_steps; ++step) {
        cur = t_map(cur);
        auto it = seen.find(cur);
        if (it != seen.end()) {
            std::size_t start = it->second;
            out.tail.assign(traj.begin(), traj.begin() + start);
            out.cycle.assign(traj.begin() + start, traj.end());
            auto min_it = std::min_element(out.cycle.begin(), out.cycle.end());
            std::rotate(out.cycle.begin(), min_it, out.cycle.end());
            out.steps_used = step;
            out.decided = true;
            return out;
        }
        seen.emplace(cur, traj.size());
        traj.push_back(cur);
    }
    out.steps_used = max_steps;
    return out;
}

std::vector<int> parity_sequence(const Rational2& x, std::uint64_t n) {
    std::vector<int> bits;
    bits.reserve(n);
    Rational2 cur = x;
    for (std::uint64_t i = 0; i < n; ++i) {
        bits.push_back(parity(cur));
        if (i + 1 < n) cur = t_map(cur);
    }
    return bits;
}

}  // namespace ratcycle
