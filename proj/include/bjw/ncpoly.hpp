#pragma once

#include <map>

#include "bjw/scalar.hpp"
#include "bjw/word.hpp"

namespace bjw {

// Noncommutative polynomial in q and p: a finite sum of words with ScalarCoeff
// coefficients. The term map is canonical (no zero coefficients), so operator==
// is exact value equality of representations. Equality modulo the relation
// pq - qp = -i*hbar is equals_mod_ccr below.
class NCPoly {
public:
    using TermMap = std::map<Word, ScalarCoeff>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly one() { return scalar(ScalarCoeff::one()); }
    static NCPoly scalar(const ScalarCoeff& c);
    static NCPoly variable(Var v);
    static NCPoly from_word(const Word& w, const ScalarCoeff& c = ScalarCoeff::one());

    bool is_zero() const { return terms_.empty(); }
    // Supported only on the identity word, i.e. a scalar multiple of 1.
    bool is_central() const;
    bool is_standard_ordered() const;
    std::size_t term_count() const { return terms_.size(); }
    unsigned degree() const;

    const TermMap& terms() const { return terms_; }
    ScalarCoeff coeff(const Word& w) const;

    void add_term(const Word& w, const ScalarCoeff& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    // Free product: words concatenate, no rewriting.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    NCPoly scaled(const ScalarCoeff& c) const;
    NCPoly scaled(const Rational& r) const { return scaled(ScalarCoeff::of(r)); }
    NCPoly pow(unsigned k) const;

    bool operator==(const NCPoly&) const = default;

private:
    TermMap terms_;
};

// Canonical form modulo pq - qp = -i*hbar: every word rewritten to q^a p^b.
// Idempotent, and equal to the input as an element of the Weyl algebra.
NCPoly normal_form(const NCPoly& a);

// normal_form(ab - ba).
NCPoly commutator(const NCPoly& a, const NCPoly& b);

// Cyclic derivative: for each occurrence of var in a word, the word read
// cyclically starting just after the occurrence, with the occurrence deleted.
NCPoly cyclic_derivative(const NCPoly& a, Var var);

// Words reversed, coefficients conjugated (q and p are formally self-adjoint).
NCPoly formal_adjoint(const NCPoly& a);

bool equals_mod_ccr(const NCPoly& a, const NCPoly& b);

// The hbar^0 part, i.e. the classical leading symbol of a normal form.
NCPoly hbar_leading_part(const NCPoly& a);

}  // namespace bjw
