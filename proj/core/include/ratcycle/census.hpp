#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ratcycle/parity_vector.hpp"
#include "ratcycle/rational2.hpp"

namespace ratcycle {

// One attracting cycle of T on D_k, rotated to start at its smallest member.
struct AttractorRecord {
    std::uint64_t k = 0;
    std::vector<mpz_class> cycle_numerators;
    std::uint64_t lambda = 0;
    std::uint64_t omega = 0;
    mpz_class min_numerator;

    // Parity string read off the cycle.
    ParityVector parity_vector() const;

    bool operator==(const AttractorRecord& o) const = default;
};

// Outcome of surveying the fractions j/k, 1 <= j <= depth, gcd(j,k)=1.
struct DenominatorReport {
    std::uint64_t k = 0;
    std::uint64_t depth = 0;
    std::uint64_t step_cap = 0;
    std::vector<AttractorRecord> attractors;   // sorted by min_numerator
    std::vector<std::uint64_t> undecided_numerators;
};

struct PhenomenaReport {
    std::uint64_t k = 0;
    // (c1, c2) with lambda(c1) | lambda(c2), omega(c1) | omega(c2),
    // lambda(c1) < lambda(c2), and equal lambda/omega ratios.
    std::vector<std::pair<AttractorRecord, AttractorRecord>> scaling_pairs;
    // Equal lambda/omega ratio but lambda(c1) does not divide lambda(c2)
    // (or omega likewise); kept separate because the integrality of the
    // ratios is an observation, not part of the ratio-equality criterion.
    std::vector<std::pair<AttractorRecord, AttractorRecord>> nonintegral_ratio_pairs;
    // Maximal sets of >= 2 attractors sharing (lambda, omega).
    std::vector<std::vector<AttractorRecord>> repetition_groups;
    // Pairs where lambda and omega fail to increase together.
    std::vector<std::pair<AttractorRecord, AttractorRecord>> covariance_exceptions;
};

struct ATablePoint {
    std::uint64_t depth = 0;
    std::uint64_t single_attractor_count = 0;
};

// True iff T maps D_k to itself, i.e. k = 1 or 5 mod 6.
inline bool preserves_dk(std::uint64_t k) { return k % 6 == 1 || k % 6 == 5; }

// Incremental depth search over one denominator.  Extending to a larger
// depth processes only the new numerators, so a depth-N state is exactly
// what a fresh depth-N search would produce.
class DenominatorSearch {
public:
    DenominatorSearch(std::uint64_t k, std::uint64_t step_cap);

    void extend_to(std::uint64_t depth);

    std::uint64_t k() const { return k_; }
    std::uint64_t depth() const { return depth_; }
    const std::vector<AttractorRecord>& attractors() const { return attractors_; }
    const std::vector<std::uint64_t>& undecided() const { return undecided_; }

    DenominatorReport report() const;

private:
    std::uint64_t k_;
    std::uint64_t step_cap_;
    std::uint64_t depth_ = 0;
    std::vector<AttractorRecord> attractors_;      // in discovery order
    std::vector<std::uint64_t> undecided_;
    // class_[j-1] for surveyed j: attractor index, kUnknown, or kUndecided.
    std::vector<std::int32_t> class_;

    std::int32_t classify(std::uint64_t j);
    std::int32_t register_cycle(std::vector<mpz_class> cycle);
};

DenominatorReport search_denominator(std::uint64_t k, std::uint64_t depth,
                                     std::uint64_t step_cap);

PhenomenaReport detect_phenomena(const DenominatorReport& report);

struct PhenomenaCensus {
    // Denominators exhibiting at least one scaling pair / repetition group /
    // both.
    std::uint64_t scaling_denominators = 0;
    std::uint64_t repetition_denominators = 0;
    std::uint64_t both_denominators = 0;
    // Raw tallies of pairs and groups across the sweep.
    std::uint64_t scaling_pairs_total = 0;
    std::uint64_t repetition_groups_total = 0;
    std::vector<PhenomenaReport> reports;  // only k with any phenomenon
};

PhenomenaCensus phenomena_census(std::uint64_t k_max, std::uint64_t depth,
                                 std::uint64_t step_cap = 100000,
                                 unsigned jobs = 0);

// A(N) for each N in depths: the number of k = 1,5 mod 6 in [1, k_max]
// whose depth-N search finds exactly one attractor and no undecided orbit.
std::vector<ATablePoint> a_table(std::uint64_t k_max,
                                 const std::vector<std::uint64_t>& depths,
                                 std::uint64_t step_cap,
                                 unsigned jobs = 0);

// True iff the depth search finds exactly one attractor and no undecided
// orbits; the report is returned either way.
std::pair<bool, DenominatorReport> deep_verify(std::uint64_t k, std::uint64_t depth,
                                               std::uint64_t step_cap);

}  // namespace ratcycle
