#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bjw/linsolve.hpp"
#include "bjw/ncpoly.hpp"
#include "bjw/quantize.hpp"

namespace bjw {

// Candidate quantization of one monomial: a weight per operator ordering.
// Weights must sum to 1 so the classical leading symbol is recovered.
struct OrderingVector {
    ClassicalMonomial monomial;
    std::map<Word, Rational> weights;
};

// Affine solution set of the commutator conditions
//   H q - q H = -i hbar dH/dp ,  H p - p H = +i hbar dH/dq
// (cyclic derivative on the word expansion) plus normalization, over the
// ordering weights of one monomial.
struct SolutionSpace {
    ClassicalMonomial monomial;
    std::vector<Word> words;  // unknown order, matching all_orderings(monomial)
    bool feasible = false;
    OrderingVector particular;
    std::vector<std::map<Word, Rational>> nullspace_basis;
    std::size_t dimension = 0;
};

// p^m q^n - q^n p^m == -i hbar m sum_{l=0}^{n-1} q^(n-1-l) p^(m-1) q^l,
// checked exactly. Requires m, n >= 1.
bool check_eq7(unsigned m, unsigned n);

// The two residuals of the commutator conditions for a word-level operator H.
// Both are identically zero iff H satisfies the conditions.
std::pair<NCPoly, NCPoly> eom_residuals(const NCPoly& h);

// (q-condition holds, p-condition holds) for the given rule applied to m.
std::pair<bool, bool> check_eq11(Rule rule, const ClassicalMonomial& m);

// Exact ordering weights for rule applied to m, on the all_orderings word list.
OrderingVector rule_weights(Rule rule, const ClassicalMonomial& m);

SolutionSpace ordering_solution_space(const ClassicalMonomial& m, unsigned bound = 8);

// True iff the weights reproduce a member of the space (exact affine solve).
bool solution_space_contains(const SolutionSpace& space, const OrderingVector& v);

// Direct resubstitution: weights sum to 1 and both residuals vanish.
bool weights_satisfy_conditions(const OrderingVector& v);

NCPoly apply_ordering(const OrderingVector& v);

struct BjWeylDifference {
    NCPoly difference;  // normal form of BJ(m) - Weyl(m)
    bool central = false;
};

BjWeylDifference bj_weyl_difference(const ClassicalMonomial& m);

// First monomial, scanning total degree ascending then s ascending, whose
// BJ-Weyl difference is not a multiple of the identity. Bound must be <= 12.
std::optional<ClassicalMonomial> smallest_noncentral_difference(unsigned bound);

}  // namespace bjw
