#pragma once

#include <vector>

#include "bjw/rational.hpp"

namespace bjw {

// Exact affine solution set of A x = b over the rationals:
// x = particular + span(nullspace).
struct AffineSolution {
    bool feasible = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;

    std::size_t dimension() const { return nullspace.size(); }
};

// Solves A x = b exactly. Rows are scaled to integers and eliminated with
// fraction-free (Bareiss) pivoting; back-substitution recovers the rational
// particular solution (free variables zero) and a nullspace basis (one free
// variable set to one per basis vector).
AffineSolution solve_exact(const std::vector<std::vector<Rational>>& a,
                           const std::vector<Rational>& b);

// True iff v lies in the affine set particular + span(nullspace).
bool affine_contains(const AffineSolution& sol, const std::vector<Rational>& v);

}  // namespace bjw
