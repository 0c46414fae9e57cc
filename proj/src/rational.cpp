#include "bjw/rational.hpp"

namespace bjw {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= (n - k + j);
        r /= j;
    }
    return r;
}

GaussianRational minus_i_pow(unsigned k) {
    switch (k % 4) {
        case 0: return GaussianRational(Rational(1), Rational(0));
        case 1: return GaussianRational(Rational(0), Rational(-1));
        case 2: return GaussianRational(Rational(-1), Rational(0));
        default: return GaussianRational(Rational(0), Rational(1));
    }
}

}  // namespace bjw
