#pragma once

#include <map>

#include "bjw/rational.hpp"
#include "bjw/word.hpp"

namespace bjw {

// p^s q^r as a commutative monomial; (0,0) is the constant 1.
struct ClassicalMonomial {
    unsigned s = 0;  // power of p
    unsigned r = 0;  // power of q

    unsigned total_degree() const { return s + r; }

    bool operator==(const ClassicalMonomial&) const = default;
    auto operator<=>(const ClassicalMonomial&) const = default;
};

// Commutative polynomial in (p, q) with exact rational coefficients.
class ClassicalPoly {
public:
    using TermMap = std::map<ClassicalMonomial, Rational>;

    ClassicalPoly() = default;

    static ClassicalPoly zero() { return {}; }
    static ClassicalPoly one() { return monomial({0, 0}); }
    static ClassicalPoly monomial(const ClassicalMonomial& m, Rational coeff = Rational(1));
    static ClassicalPoly variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ClassicalMonomial& m) const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const;

    void add_term(const ClassicalMonomial& m, const Rational& c);

    ClassicalPoly operator-() const;
    ClassicalPoly& operator+=(const ClassicalPoly& o);
    ClassicalPoly& operator-=(const ClassicalPoly& o);
    friend ClassicalPoly operator+(ClassicalPoly a, const ClassicalPoly& b) { return a += b; }
    friend ClassicalPoly operator-(ClassicalPoly a, const ClassicalPoly& b) { return a -= b; }
    friend ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b);
    ClassicalPoly scaled(const Rational& r) const;
    ClassicalPoly pow(unsigned k) const;

    bool operator==(const ClassicalPoly&) const = default;

private:
    TermMap terms_;
};

// Partial derivative with respect to p (Var::P) or q (Var::Q).
ClassicalPoly classical_derivative(const ClassicalPoly& h, Var var);

}  // namespace bjw
