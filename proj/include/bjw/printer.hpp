#pragma once

#include <string>

#include "bjw/classical.hpp"
#include "bjw/ncpoly.hpp"

namespace bjw {

// Canonical text forms. Every string printed here re-parses (noncommutative
// mode for operators, classical mode for classical polynomials) to an equal
// value. Term order: words by Q-degree then P-degree, highest first; within a
// word, hbar powers ascending.
std::string to_string(const Word& w);
std::string to_string(const ScalarCoeff& c);
std::string to_string(const NCPoly& a);
std::string to_string(const ClassicalMonomial& m);
std::string to_string(const ClassicalPoly& h);
std::string to_string(const Rational& r);

}  // namespace bjw
