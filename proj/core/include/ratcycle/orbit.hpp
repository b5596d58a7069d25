#pragma once

#include <cstdint>
#include <vector>

#include "ratcycle/rational2.hpp"

namespace ratcycle {

// Result of iterating T from a starting point until a value repeats or the
// step cap runs out.  When decided, `tail` is the pre-periodic segment and
// `cycle` is the periodic part rotated to start at its smallest element.
struct OrbitOutcome {
    std::vector<Rational2> tail;
    std::vector<Rational2> cycle;
    std::uint64_t steps_used = 0;
    bool decided = false;
};

// Iterates T from x, detecting the first revisited value with a hash set of
// exact rationals.  Undecided (cap reached without a repeat) is a normal
// outcome, not an error.
OrbitOutcome orbit(const Rational2& x, std::uint64_t max_steps);

// First n parities along the orbit of x: (parity(x), parity(Tx), ...).
std::vector<int> parity_sequence(const Rational2& x, std::uint64_t n);

}  // namespace ratcycle
