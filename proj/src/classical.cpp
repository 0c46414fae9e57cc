#include "bjw/classical.hpp"

namespace bjw {

ClassicalPoly ClassicalPoly::monomial(const ClassicalMonomial& m, Rational coeff) {
    ClassicalPoly r;
    r.add_term(m, coeff);
    return r;
}

ClassicalPoly ClassicalPoly::variable(Var v) {
    return monomial(v == Var::P ? ClassicalMonomial{1, 0} : ClassicalMonomial{0, 1});
}

Rational ClassicalPoly::coeff(const ClassicalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ClassicalPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void ClassicalPoly::add_term(const ClassicalMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ClassicalPoly ClassicalPoly::operator-() const {
    ClassicalPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b) {
    ClassicalPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.s + mb.s, ma.r + mb.r}, ca * cb);
    return r;
}

ClassicalPoly ClassicalPoly::scaled(const Rational& r) const {
    ClassicalPoly out;
    if (r == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
    return out;
}

ClassicalPoly ClassicalPoly::pow(unsigned k) const {
    ClassicalPoly r = ClassicalPoly::one();
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
}

ClassicalPoly classical_derivative(const ClassicalPoly& h, Var var) {
    ClassicalPoly r;
    for (const auto& [m, c] : h.terms()) {
        if (var == Var::P && m.s > 0) r.add_term({m.s - 1, m.r}, c * m.s);
        if (var == Var::Q && m.r > 0) r.add_term({m.s, m.r - 1}, c * m.r);
    }
    return r;
}

}  // namespace bjw
