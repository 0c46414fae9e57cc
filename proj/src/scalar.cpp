#include "bjw/scalar.hpp"

#include <cmath>

namespace bjw {

ScalarCoeff ScalarCoeff::of(Rational r) {
    ScalarCoeff c;
    c.add(0, GaussianRational(std::move(r)));
    return c;
}

ScalarCoeff ScalarCoeff::i() {
    ScalarCoeff c;
    c.add(0, GaussianRational::i());
    return c;
}

ScalarCoeff ScalarCoeff::hbar(unsigned power) {
    ScalarCoeff c;
    c.add(power, GaussianRational::one());
    return c;
}

ScalarCoeff ScalarCoeff::term(unsigned power, GaussianRational g) {
    ScalarCoeff c;
    c.add(power, g);
    return c;
}

GaussianRational ScalarCoeff::at(unsigned power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? GaussianRational::zero() : it->second;
}

void ScalarCoeff::add(unsigned power, const GaussianRational& g) {
    if (g.is_zero()) return;
    auto [it, inserted] = terms_.emplace(power, g);
    if (!inserted) {
        it->second += g;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarCoeff ScalarCoeff::operator-() const {
    ScalarCoeff r;
    for (const auto& [k, g] : terms_) r.terms_.emplace(k, -g);
    return r;
}

ScalarCoeff& ScalarCoeff::operator+=(const ScalarCoeff& o) {
    for (const auto& [k, g] : o.terms_) add(k, g);
    return *this;
}

ScalarCoeff& ScalarCoeff::operator-=(const ScalarCoeff& o) {
    for (const auto& [k, g] : o.terms_) add(k, -g);
    return *this;
}

ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b) {
    ScalarCoeff r;
    for (const auto& [ka, ga] : a.terms_)
        for (const auto& [kb, gb] : b.terms_) r.add(ka + kb, ga * gb);
    return r;
}

ScalarCoeff& ScalarCoeff::operator*=(const ScalarCoeff& o) { return *this = *this * o; }

ScalarCoeff ScalarCoeff::conj() const {
    ScalarCoeff r;
    for (const auto& [k, g] : terms_) r.terms_.emplace(k, g.conj());
    return r;
}

std::complex<double> ScalarCoeff::eval(double hbar_value) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, g] : terms_) {
        std::complex<double> c{g.re.convert_to<double>(), g.im.convert_to<double>()};
        acc += c * std::pow(hbar_value, static_cast<int>(k));
    }
    return acc;
}

}  // namespace bjw
