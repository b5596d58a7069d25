#include "ratcycle/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace ratcycle {

namespace {

constexpr std::int32_t kUnknown = -1;
constexpr std::int32_t kSkipped = -2;   // gcd(j, k) > 1: belongs to a smaller denominator
constexpr std::int32_t kUndecided = -3;

struct MpzHash {
    std::size_t operator()(const mpz_class& v) const {
        return mpz_fdiv_ui(v.get_mpz_t(), 0x3fffffffffffffdd);
    }
};

// Runs fn(i) for i in [0, n) across `jobs` threads.  Work items are claimed
// from an atomic counter; each fn writes only to its own output slot, so the
// merged result does not depend on scheduling.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

std::vector<std::uint64_t> denominators_up_to(std::uint64_t k_max) {
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k = 1; k <= k_max; ++k)
        if (preserves_dk(k)) ks.push_back(k);
    return ks;
}

bool same_ratio(const AttractorRecord& a, const AttractorRecord& b) {
    return a.lambda * b.omega == b.lambda * a.omega;
}

}  // namespace

ParityVector AttractorRecord::parity_vector() const {
    ParityVector v;
    v.bits.reserve(cycle_numerators.size());
    for (const auto& n : cycle_numerators)
        v.bits.push_back(mpz_odd_p(n.get_mpz_t()) ? 1 : 0);
    return v;
}

DenominatorSearch::DenominatorSearch(std::uint64_t k, std::uint64_t step_cap)
    : k_(k), step_cap_(step_cap) {
    if (!preserves_dk(k))
        throw std::invalid_argument("T preserves D_k only for k = 1 or 5 mod 6");
    if (step_cap == 0) throw std::invalid_argument("step cap must be positive");
}

std::int32_t DenominatorSearch::register_cycle(std::vector<mpz_class> cycle) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    for (std::size_t i = 0; i < attractors_.size(); ++i)
        if (attractors_[i].cycle_numerators == cycle)
            return static_cast<std::int32_t>(i);
    AttractorRecord rec;
    rec.k = k_;
    rec.lambda = cycle.size();
    rec.omega = 0;
    for (const auto& n : cycle)
        if (mpz_odd_p(n.get_mpz_t())) ++rec.omega;
    rec.min_numerator = cycle.front();
    rec.cycle_numerators = std::move(cycle);
    attractors_.push_back(std::move(rec));
    return static_cast<std::int32_t>(attractors_.size() - 1);
}

std::int32_t DenominatorSearch::classify(std::uint64_t j) {
    std::vector<mpz_class> traj;
    std::unordered_map<mpz_class, std::size_t, MpzHash> seen;
    mpz_class num(static_cast<unsigned long>(j));
    std::int32_t result = kUndecided;
    for (std::uint64_t step = 0; step <= step_cap_; ++step) {
        // Numerators below j are already classified (orbits preserve
        // coprimality to k, so they were surveyed).
        if (mpz_cmp_ui(num.get_mpz_t(), j) < 0) {
            std::int32_t c = class_[mpz_get_ui(num.get_mpz_t()) - 1];
            if (c >= 0) {
                result = c;
                break;
            }
            // c == kUndecided: no conclusion cached, keep iterating.
        }
        auto [it, inserted] = seen.try_emplace(num, traj.size());
        if (!inserted) {
            result = register_cycle(
                std::vector<mpz_class>(traj.begin() + it->second, traj.end()));
            break;
        }
        traj.push_back(num);
        if (mpz_odd_p(num.get_mpz_t())) {
            num *= 3;
            num += k_;
            num >>= 1;
        } else {
            num >>= 1;
        }
    }
    if (result >= 0) {
        // Cache the verdict for every surveyed numerator on the way.
        for (const auto& v : traj) {
            if (mpz_cmp_ui(v.get_mpz_t(), class_.size()) <= 0) {
                std::uint64_t u = mpz_get_ui(v.get_mpz_t());
                if (u > j && class_[u - 1] == kUnknown) class_[u - 1] = result;
            }
        }
    }
    return result;
}

void DenominatorSearch::extend_to(std::uint64_t depth) {
    if (depth < depth_) throw std::invalid_argument("depth may only grow");
    class_.resize(depth, kUnknown);
    for (std::uint64_t j = depth_ + 1; j <= depth; ++j) {
        if (class_[j - 1] != kUnknown) continue;
        if (std::gcd(j, k_) != 1) {
            class_[j - 1] = kSkipped;
            continue;
        }
        std::int32_t c = classify(j);
        class_[j - 1] = c;
        if (c == kUndecided) undecided_.push_back(j);
    }
    depth_ = depth;
}

DenominatorReport DenominatorSearch::report() const {
    DenominatorReport rep;
    rep.k = k_;
    rep.depth = depth_;
    rep.step_cap = step_cap_;
    rep.attractors = attractors_;
    std::sort(rep.attractors.begin(), rep.attractors.end(),
              [](const AttractorRecord& a, const AttractorRecord& b) {
                  return a.min_numerator < b.min_numerator;
              });
    rep.undecided_numerators = undecided_;
    return rep;
}

DenominatorReport search_denominator(std::uint64_t k, std::uint64_t depth,
                                     std::uint64_t step_cap) {
    if (depth == 0) throw std::invalid_argument("depth must be positive");
    DenominatorSearch s(k, step_cap);
    s.extend_to(depth);
    return s.report();
}

PhenomenaReport detect_phenomena(const DenominatorReport& report) {
    PhenomenaReport out;
    out.k = report.k;
    const auto& atts = report.attractors;  // already sorted by min_numerator

    for (std::size_t i = 0; i < atts.size(); ++i) {
        for (std::size_t j = 0; j < atts.size(); ++j) {
            const auto& a = atts[i];
            const auto& b = atts[j];
            if (a.lambda >= b.lambda) continue;
            if (!same_ratio(a, b)) continue;
            if (b.lambda % a.lambda == 0 && b.omega % a.omega == 0)
                out.scaling_pairs.emplace_back(a, b);
            else
                out.nonintegral_ratio_pairs.emplace_back(a, b);
        }
    }

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<AttractorRecord>> by_inv;
    for (const auto& a : atts) by_inv[{a.lambda, a.omega}].push_back(a);
    std::vector<std::pair<mpz_class, std::vector<AttractorRecord>>> groups;
    for (auto& [inv, group] : by_inv)
        if (group.size() >= 2) groups.emplace_back(group.front().min_numerator, group);
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [mn, group] : groups) out.repetition_groups.push_back(std::move(group));

    for (std::size_t i = 0; i < atts.size(); ++i) {
        for (std::size_t j = i + 1; j < atts.size(); ++j) {
            const auto& a = atts[i];
            const auto& b = atts[j];
            if (a.lambda == b.lambda && a.omega == b.omega) continue;
            auto dl = static_cast<std::int64_t>(a.lambda) - static_cast<std::int64_t>(b.lambda);
            auto dw = static_cast<std::int64_t>(a.omega) - static_cast<std::int64_t>(b.omega);
            if (dl * dw <= 0) out.covariance_exceptions.emplace_back(a, b);
        }
    }
    return out;
}

PhenomenaCensus phenomena_census(std::uint64_t k_max, std::uint64_t depth,
                                 std::uint64_t step_cap, unsigned jobs) {
    auto ks = denominators_up_to(k_max);
    std::vector<PhenomenaReport> reports(ks.size());
    parallel_for(ks.size(), jobs, [&](std::size_t i) {
        reports[i] = detect_phenomena(search_denominator(ks[i], depth, step_cap));
    });
    PhenomenaCensus out;
    for (auto& rep : reports) {
        // The counting unit for "shows scaling" is ratio equality; the
        // integrality of the length ratios is tracked but not required.
        bool scal = !rep.scaling_pairs.empty() || !rep.nonintegral_ratio_pairs.empty();
        bool repn = !rep.repetition_groups.empty();
        if (scal) ++out.scaling_denominators;
        if (repn) ++out.repetition_denominators;
        if (scal && repn) ++out.both_denominators;
        out.scaling_pairs_total += rep.scaling_pairs.size() + rep.nonintegral_ratio_pairs.size();
        out.repetition_groups_total += rep.repetition_groups.size();
        if (scal || repn || !rep.covariance_exceptions.empty())
            out.reports.push_back(std::move(rep));
    }
    return out;
}

std::vector<ATablePoint> a_table(std::uint64_t k_max,
                                 const std::vector<std::uint64_t>& depths,
                                 std::uint64_t step_cap, unsigned jobs) {
    if (!std::is_sorted(depths.begin(), depths.end()) ||
        std::adjacent_find(depths.begin(), depths.end()) != depths.end())
        throw std::invalid_argument("depths must be strictly increasing");
    auto ks = denominators_up_to(k_max);
    // counts[i][d]: attractor tally for ks[i] at depths[d]; -1 marks a
    // denominator with an undecided orbit (excluded from A and reported).
    std::vector<std::vector<std::int64_t>> counts(ks.size());
    parallel_for(ks.size(), jobs, [&](std::size_t i) {
        DenominatorSearch s(ks[i], step_cap);
        for (std::uint64_t d : depths) {
            s.extend_to(d);
            counts[i].push_back(s.undecided().empty()
                                    ? static_cast<std::int64_t>(s.attractors().size())
                                    : -1);
        }
    });
    std::vector<ATablePoint> table;
    for (std::size_t d = 0; d < depths.size(); ++d) {
        ATablePoint pt;
        pt.depth = depths[d];
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (counts[i][d] == 1) ++pt.single_attractor_count;
        table.push_back(pt);
    }
    return table;
}

std::pair<bool, DenominatorReport> deep_verify(std::uint64_t k, std::uint64_t depth,
                                               std::uint64_t step_cap) {
    DenominatorReport rep = search_denominator(k, depth, step_cap);
    bool ok = rep.attractors.size() == 1 && rep.undecided_numerators.empty();
    return {ok, std::move(rep)};
}

}  // namespace ratcycle
