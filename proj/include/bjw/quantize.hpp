#pragma once

#include <stdexcept>
#include <vector>

#include "bjw/classical.hpp"
#include "bjw/ncpoly.hpp"

namespace bjw {

inline constexpr unsigned kDefaultAverageBound = 12;

enum class Rule { BornJordan, Weyl, Standard, AntiStandard, Average };
enum class Side { Standard, AntiStandard };

// Thrown when an expansion would enumerate more orderings than the bound allows.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// p^s q^r -> 1/(s+1) * sum_l p^(s-l) q^r p^l, extended linearly. Returns the
// unreduced word expansion; callers normal-form when they want canonical output.
NCPoly bj_quantize(const ClassicalPoly& h);

// The dual split 1/(r+1) * sum_j q^(r-j) p^s q^j. Kept as a second route and
// tested equal to bj_quantize as an operator.
NCPoly bj_quantize_q_split(const ClassicalPoly& h);

// p^s q^r -> 2^-s * sum_l C(s,l) p^(s-l) q^r p^l.
NCPoly weyl_quantize(const ClassicalPoly& h);

// Standard: q^r p^s. AntiStandard: p^s q^r.
NCPoly ordering_quantize(const ClassicalPoly& h, Side side);

// All distinct words with s P letters and r Q letters, in lexicographic order
// with Q < P. Throws SizeError (naming the word count) when s + r > bound.
std::vector<Word> all_orderings(const ClassicalMonomial& m, unsigned bound = kDefaultAverageBound);

// Uniform average over all_orderings(m).
NCPoly average_all_orderings(const ClassicalMonomial& m, unsigned bound = kDefaultAverageBound);
NCPoly average_all_orderings(const ClassicalPoly& h, unsigned bound = kDefaultAverageBound);

NCPoly quantize(Rule rule, const ClassicalPoly& h, unsigned average_bound = kDefaultAverageBound);

}  // namespace bjw
