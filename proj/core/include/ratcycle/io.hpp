#pragma once

#include <iosfwd>
#include <map>

#include "ratcycle/census.hpp"

namespace ratcycle {

// One line of the attractor registry: a record plus the search parameters
// it was found under.  Numerators travel as decimal strings so arbitrary
// precision survives serialization exactly.
struct RegistryLine {
    AttractorRecord record;
    std::uint64_t depth = 0;
    std::uint64_t step_cap = 0;

    bool operator==(const RegistryLine&) const = default;
};

void write_registry_jsonl(std::ostream& os, const DenominatorReport& report);
void write_registry_jsonl(std::ostream& os, const std::vector<RegistryLine>& lines);
std::vector<RegistryLine> read_registry_jsonl(std::istream& is);

void write_atable_csv(std::ostream& os, const std::vector<ATablePoint>& table);
std::vector<ATablePoint> read_atable_csv(std::istream& is);

void write_nu_census_csv(std::ostream& os,
                         const std::map<std::uint64_t, std::uint64_t>& census);

void write_phenomena_csv(std::ostream& os, const PhenomenaCensus& census);

}  // namespace ratcycle
