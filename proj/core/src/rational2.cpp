#include "ratcycle/rational2.hpp"

namespace ratcycle {

Rational2::Rational2(mpz_class n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
    if (mpz_even_p(den_.get_mpz_t()))
        throw std::invalid_argument("denominator must be odd: not a member of Q[(2)]");
}

Rational2 Rational2::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational2(mpz_class(std::string(text)));
    mpz_class n(std::string(text.substr(0, slash)));
    mpz_class d(std::string(text.substr(slash + 1)));
    return Rational2(std::move(n), std::move(d));
}

std::string Rational2::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational2 t_map(const Rational2& x) {
    if (x.is_odd()) {
        // (3x+1)/2 = (3 num + den) / (2 den); the new numerator is even, so
        // the factor 2 cancels and the denominator stays odd.
        mpz_class n = 3 * x.num() + x.den();
        n >>= 1;
        return Rational2(std::move(n), x.den());
    }
    mpz_class n = x.num() >> 1;
    return Rational2(std::move(n), x.den());
}

}  // namespace ratcycle
