#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ratcycle/rational2.hpp"

namespace ratcycle {

// A finite 0-1 vector.  Read as the parity string of a candidate cycle.
struct ParityVector {
    std::vector<std::uint8_t> bits;

    ParityVector() = default;
    explicit ParityVector(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    // Parses a string of '0'/'1' characters; throws on anything else or empty.
    static ParityVector parse(const std::string& s);

    std::size_t size() const { return bits.size(); }
    std::string str() const;
    bool operator==(const ParityVector&) const = default;
    auto operator<=>(const ParityVector&) const = default;
};

// The invariants of a 0-1 vector v of length n:
//   lambda = n, omega = number of ones,
//   rho    = sum_j v_j * 3^(v_{j+1}+...+v_{n-1}) * 2^j,
//   big_j  = 2^lambda - 3^omega (never zero for n >= 1).
// The point of period lambda whose parity string is v is rho / big_j.
struct CycleInvariants {
    std::uint64_t lambda = 0;
    std::uint64_t omega = 0;
    mpz_class rho;
    mpz_class big_j;
};

CycleInvariants invariants(const ParityVector& v);

// The unique periodic point with parity string v, in lowest terms.
Rational2 bsl_point(const ParityVector& v);

// Denominator of bsl_point(v): |J| / gcd(rho, |J|).  The all-zero vector
// maps to 1 via gcd(0, m) = m.
mpz_class denominator_of(const ParityVector& v);

// Executable statement of the closed-form theorem: true iff x(v) has period
// lambda under T and parity string exactly v, checked by actual iteration.
bool verify_bsl(const ParityVector& v);

// All lambda cyclic rotations of v, in order of shift.
std::vector<ParityVector> rotations(const ParityVector& v);

// True iff v is aperiodic: not a repetition of a strictly shorter block.
// Equivalent to all rotations being pairwise distinct.
bool is_primitive(const ParityVector& v);

inline constexpr std::uint64_t kMaxEnumerationLength = 28;

// Calls fn for each 0-1 vector of length n in lexicographic order,
// optionally restricted to primitive vectors.  Throws on n = 0 or
// n > kMaxEnumerationLength.
void enumerate_vectors(std::uint64_t n, bool primitive_only,
                       const std::function<void(const ParityVector&)>& fn);

// Standard Mobius function by trial division.
int mobius(std::uint64_t d);

// Number of irreducible cycles of length n: (1/n) sum_{d|n} mu(d) 2^(n/d).
mpz_class irreducible_count(std::uint64_t n);

// Counts primitive vectors of length n grouped by denominator_of.
// Every count is divisible by n, and n vectors per attractor.
std::map<std::uint64_t, std::uint64_t> nu_census(std::uint64_t n);

// Checks that the census total equals sum_{d|n} mu(d) 2^(n/d).
bool verify_prop_3_2(std::uint64_t n);

// All primitive vectors with the given lambda, omega whose periodic point
// has denominator exactly k.  Requires k | |2^lambda - 3^omega|.
std::vector<ParityVector> vectors_with_invariants(std::uint64_t lambda,
                                                  std::uint64_t omega,
                                                  const mpz_class& k);

}  // namespace ratcycle
