#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratcycle {

// A rational j/k with k odd and positive, kept in lowest terms.  The sign
// lives in the numerator; 0 is stored as 0/1.  This is the natural domain
// of the accelerated 3x+1 map, since the parity of j/k is well defined.
class Rational2 {
public:
    Rational2() : num_(0), den_(1) {}
    Rational2(long n) : num_(n), den_(1) {}
    explicit Rational2(mpz_class n) : num_(std::move(n)), den_(1) {}

    // Reduces and normalizes; throws std::invalid_argument if the reduced
    // denominator is even (such a fraction has no well-defined parity).
    Rational2(mpz_class n, mpz_class d);

    // Parses "j/k" or "j".
    static Rational2 parse(std::string_view text);

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_odd() const { return mpz_odd_p(num_.get_mpz_t()) != 0; }
    bool is_integer() const { return den_ == 1; }

    bool operator==(const Rational2& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational2& o) const {
        int c = cmp(num_ * o.den_, o.num_ * den_);
        return c <=> 0;
    }

    std::string str() const;

private:
    mpz_class num_;
    mpz_class den_;
};

// Parity of x: 1 iff the numerator is odd.
inline int parity(const Rational2& x) { return x.is_odd() ? 1 : 0; }

// One step of the accelerated 3x+1 map: x/2 for even x, (3x+1)/2 for odd x.
Rational2 t_map(const Rational2& x);

struct Rational2Hash {
    std::size_t operator()(const Rational2& x) const {
        // Residues mod a 62-bit prime; cheap and collision-poor enough for
        // orbit-sized sets.
        const unsigned long p = 0x3fffffffffffffdd;
        unsigned long hn = mpz_fdiv_ui(x.num().get_mpz_t(), p);
        unsigned long hd = mpz_fdiv_ui(x.den().get_mpz_t(), p);
        if (mpz_sgn(x.num().get_mpz_t()) < 0) hn = p - hn;
        return hn * 1000003u + hd;
    }
};

}  // namespace ratcycle
