#include "ratcycle/parity_vector.hpp"

#include <algorithm>
#include <stdexcept>

#include "ratcycle/orbit.hpp"

namespace ratcycle {

ParityVector ParityVector::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty parity vector");
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("parity vector must be 0/1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ParityVector(std::move(bits));
}

std::string ParityVector::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

CycleInvariants invariants(const ParityVector& v) {
    const std::size_t n = v.bits.size();
    if (n == 0) throw std::invalid_argument("empty parity vector");
    CycleInvariants inv;
    inv.lambda = n;
    // Walk right to left so the 3^(suffix ones) factor is a running product.
    mpz_class pow3 = 1;
    mpz_class term;
    inv.rho = 0;
    for (std::size_t jj = n; jj-- > 0;) {
        if (v.bits[jj]) {
            ++inv.omega;
            mpz_mul_2exp(term.get_mpz_t(), pow3.get_mpz_t(), jj);
            inv.rho += term;
            pow3 *= 3;
        }
    }
    mpz_class p2, p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, inv.lambda);
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, inv.omega);
    inv.big_j = p2 - p3;
    return inv;
}

Rational2 bsl_point(const ParityVector& v) {
    CycleInvariants inv = invariants(v);
    return Rational2(inv.rho, inv.big_j);
}

mpz_class denominator_of(const ParityVector& v) {
    CycleInvariants inv = invariants(v);
    mpz_class aj = abs(inv.big_j);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), inv.rho.get_mpz_t(), aj.get_mpz_t());
    return aj / g;
}

bool verify_bsl(const ParityVector& v) {
    Rational2 x = bsl_point(v);
    Rational2 cur = x;
    for (std::size_t j = 0; j < v.bits.size(); ++j) {
        if (parity(cur) != v.bits[j]) return false;
        cur = t_map(cur);
    }
    return cur == x;
}

std::vector<ParityVector> rotations(const ParityVector& v) {
    const std::size_t n = v.bits.size();
    std::vector<ParityVector> out;
    out.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        ParityVector r;
        r.bits.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.bits.push_back(v.bits[(i + s) % n]);
        out.push_back(std::move(r));
    }
    return out;
}

bool is_primitive(const ParityVector& v) {
    const std::size_t n = v.bits.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i)
            if (v.bits[i] != v.bits[i - d]) repeats = false;
        if (repeats) return false;
    }
    return true;
}

void enumerate_vectors(std::uint64_t n, bool primitive_only,
                       const std::function<void(const ParityVector&)>& fn) {
    if (n == 0) throw std::invalid_argument("vector length must be positive");
    if (n > kMaxEnumerationLength)
        throw std::invalid_argument("exhaustive enumeration capped at length 28");
    ParityVector v;
    v.bits.assign(n, 0);
    while (true) {
        if (!primitive_only || is_primitive(v)) fn(v);
        // lexicographic increment
        std::size_t i = n;
        while (i > 0 && v.bits[i - 1] == 1) v.bits[--i] = 0;
        if (i == 0) break;
        v.bits[i - 1] = 1;
    }
}

int mobius(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("mobius is defined for d >= 1");
    int primes = 0;
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            ++primes;
        }
    }
    if (d > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

mpz_class irreducible_count(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    mpz_class sum = 0;
    mpz_class p2;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, n / d);
        if (mu > 0)
            sum += p2;
        else
            sum -= p2;
    }
    return sum / n;
}

std::map<std::uint64_t, std::uint64_t> nu_census(std::uint64_t n) {
    std::map<std::uint64_t, std::uint64_t> counts;
    enumerate_vectors(n, /*primitive_only=*/true, [&](const ParityVector& v) {
        mpz_class k = denominator_of(v);
        ++counts[k.get_ui()];
    });
    return counts;
}

bool verify_prop_3_2(std::uint64_t n) {
    mpz_class total = 0;
    for (const auto& [k, nu] : nu_census(n)) total += nu;
    return total == irreducible_count(n) * n;
}

std::vector<ParityVector> vectors_with_invariants(std::uint64_t lambda,
                                                  std::uint64_t omega,
                                                  const mpz_class& k) {
    if (omega > lambda) throw std::invalid_argument("omega must not exceed lambda");
    mpz_class p2, p3;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, lambda);
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, omega);
    mpz_class aj = abs(p2 - p3);
    if (!mpz_divisible_p(aj.get_mpz_t(), k.get_mpz_t()))
        throw std::invalid_argument("k does not divide |2^lambda - 3^omega|");

    // Enumerate weight-omega vectors directly via prev_permutation on the
    // bit pattern; cost is C(lambda, omega), not 2^lambda.
    std::vector<ParityVector> out;
    ParityVector v;
    v.bits.assign(lambda, 0);
    std::fill(v.bits.begin(), v.bits.begin() + omega, std::uint8_t{1});
    do {
        if (!is_primitive(v)) continue;
        if (denominator_of(v) == k) out.push_back(v);
    } while (std::prev_permutation(v.bits.begin(), v.bits.end()));
    return out;
}

}  // namespace ratcycle
