#include "ratcycle/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ratcycle {

namespace {

nlohmann::json to_json(const RegistryLine& line) {
    nlohmann::json j;
    j["k"] = line.record.k;
    j["min_numerator"] = line.record.min_numerator.get_str();
    j["lambda"] = line.record.lambda;
    j["omega"] = line.record.omega;
    auto& nums = j["cycle_numerators"] = nlohmann::json::array();
    for (const auto& n : line.record.cycle_numerators) nums.push_back(n.get_str());
    j["depth"] = line.depth;
    j["step_cap"] = line.step_cap;
    return j;
}

}  // namespace

void write_registry_jsonl(std::ostream& os, const std::vector<RegistryLine>& lines) {
    for (const auto& line : lines) os << to_json(line).dump() << '\n';
}

void write_registry_jsonl(std::ostream& os, const DenominatorReport& report) {
    std::vector<RegistryLine> lines;
    lines.reserve(report.attractors.size());
    for (const auto& rec : report.attractors)
        lines.push_back({rec, report.depth, report.step_cap});
    write_registry_jsonl(os, lines);
}

std::vector<RegistryLine> read_registry_jsonl(std::istream& is) {
    std::vector<RegistryLine> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        RegistryLine rl;
        rl.record.k = j.at("k").get<std::uint64_t>();
        rl.record.min_numerator = mpz_class(j.at("min_numerator").get<std::string>());
        rl.record.lambda = j.at("lambda").get<std::uint64_t>();
        rl.record.omega = j.at("omega").get<std::uint64_t>();
        for (const auto& s : j.at("cycle_numerators"))
            rl.record.cycle_numerators.emplace_back(s.get<std::string>());
        rl.depth = j.at("depth").get<std::uint64_t>();
        rl.step_cap = j.at("step_cap").get<std::uint64_t>();
        out.push_back(std::move(rl));
    }
    return out;
}

void write_atable_csv(std::ostream& os, const std::vector<ATablePoint>& table) {
    os << "depth,A\n";
    for (const auto& p : table) os << p.depth << ',' << p.single_attractor_count << '\n';
}

std::vector<ATablePoint> read_atable_csv(std::istream& is) {
    std::vector<ATablePoint> out;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty A-table CSV");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string n, a;
        if (!std::getline(ss, n, ',') || !std::getline(ss, a, ','))
            throw std::runtime_error("malformed A-table CSV line: " + line);
        out.push_back({std::stoull(n), std::stoull(a)});
    }
    return out;
}

void write_nu_census_csv(std::ostream& os,
                         const std::map<std::uint64_t, std::uint64_t>& census) {
    os << "k,nu\n";
    for (const auto& [k, nu] : census) os << k << ',' << nu << '\n';
}

void write_phenomena_csv(std::ostream& os, const PhenomenaCensus& census) {
    os << "k,scaling_pairs,nonintegral_ratio_pairs,repetition_groups,covariance_exceptions\n";
    for (const auto& rep : census.reports)
        os << rep.k << ',' << rep.scaling_pairs.size() << ','
           << rep.nonintegral_ratio_pairs.size() << ',' << rep.repetition_groups.size()
           << ',' << rep.covariance_exceptions.size() << '\n';
}

}  // namespace ratcycle
