#pragma once

#include <complex>
#include <map>

#include "bjw/rational.hpp"

namespace bjw {

// Exact scalar: a polynomial in hbar with Gaussian-rational coefficients,
// stored sparsely as exponent -> coefficient. No zero coefficients are kept;
// the zero scalar is the empty map.
class ScalarCoeff {
public:
    using TermMap = std::map<unsigned, GaussianRational>;

    ScalarCoeff() = default;

    static ScalarCoeff zero() { return {}; }
    static ScalarCoeff one() { return of(Rational(1)); }
    static ScalarCoeff of(Rational r);
    static ScalarCoeff of(long n) { return of(Rational(n)); }
    static ScalarCoeff i();
    static ScalarCoeff hbar(unsigned power = 1);
    // g * hbar^power
    static ScalarCoeff term(unsigned power, GaussianRational g);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of hbar^power (zero if absent).
    GaussianRational at(unsigned power) const;

    void add(unsigned power, const GaussianRational& g);

    ScalarCoeff operator-() const;
    ScalarCoeff& operator+=(const ScalarCoeff& o);
    ScalarCoeff& operator-=(const ScalarCoeff& o);
    ScalarCoeff& operator*=(const ScalarCoeff& o);

    friend ScalarCoeff operator+(ScalarCoeff a, const ScalarCoeff& b) { return a += b; }
    friend ScalarCoeff operator-(ScalarCoeff a, const ScalarCoeff& b) { return a -= b; }
    friend ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b);

    // i -> -i; hbar is left untouched.
    ScalarCoeff conj() const;

    std::complex<double> eval(double hbar_value) const;

    bool operator==(const ScalarCoeff&) const = default;

private:
    TermMap terms_;
};

}  // namespace bjw
