#include "bjw/quantize.hpp"

#include <algorithm>
#include <string>

namespace bjw {

namespace {

NCPoly monomial_sandwich_sum(const ClassicalMonomial& m,
                             const std::vector<Rational>& weights) {
    // sum_l weights[l] * p^(s-l) q^r p^l
    NCPoly out;
    for (unsigned l = 0; l <= m.s; ++l) {
        Word w = Word::power(Var::P, m.s - l) + Word::power(Var::Q, m.r) + Word::power(Var::P, l);
        out.add_term(w, ScalarCoeff::of(weights[l]));
    }
    return out;
}

template <typename PerMonomial>
NCPoly extend_linearly(const ClassicalPoly& h, PerMonomial&& f) {
    NCPoly out;
    for (const auto& [m, c] : h.terms()) out += f(m).scaled(c);
    return out;
}

}  // namespace

NCPoly bj_quantize(const ClassicalPoly& h) {
    return extend_linearly(h, [](const ClassicalMonomial& m) {
        std::vector<Rational> w(m.s + 1, Rational(1, m.s + 1));
        return monomial_sandwich_sum(m, w);
    });
}

NCPoly bj_quantize_q_split(const ClassicalPoly& h) {
    return extend_linearly(h, [](const ClassicalMonomial& m) {
        NCPoly out;
        Rational weight(1, m.r + 1);
        for (unsigned j = 0; j <= m.r; ++j) {
            Word w = Word::power(Var::Q, m.r - j) + Word::power(Var::P, m.s) + Word::power(Var::Q, j);
            out.add_term(w, ScalarCoeff::of(weight));
        }
        return out;
    });
}

NCPoly weyl_quantize(const ClassicalPoly& h) {
    return extend_linearly(h, [](const ClassicalMonomial& m) {
        std::vector<Rational> w;
        w.reserve(m.s + 1);
        BigInt denom = BigInt(1) << m.s;
        for (unsigned l = 0; l <= m.s; ++l) w.emplace_back(binomial(m.s, l), denom);
        return monomial_sandwich_sum(m, w);
    });
}

NCPoly ordering_quantize(const ClassicalPoly& h, Side side) {
    return extend_linearly(h, [side](const ClassicalMonomial& m) {
        Word w = side == Side::Standard
                     ? Word::power(Var::Q, m.r) + Word::power(Var::P, m.s)
                     : Word::power(Var::P, m.s) + Word::power(Var::Q, m.r);
        return NCPoly::from_word(w);
    });
}

std::vector<Word> all_orderings(const ClassicalMonomial& m, unsigned bound) {
    if (m.total_degree() > bound) {
        BigInt count = binomial(m.total_degree(), m.s);
        throw SizeError("all_orderings: " + count.str() + " orderings for p^" +
                        std::to_string(m.s) + "*q^" + std::to_string(m.r) +
                        " exceeds bound s+r <= " + std::to_string(bound));
    }
    // next_permutation enumerates the distinct arrangements of the multiset
    // starting from the sorted one (Q < P).
    std::vector<Var> letters(m.r, Var::Q);
    letters.insert(letters.end(), m.s, Var::P);
    std::vector<Word> out;
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end(),
                                   [](Var a, Var b) { return static_cast<int>(a) < static_cast<int>(b); }));
    return out;
}

NCPoly average_all_orderings(const ClassicalMonomial& m, unsigned bound) {
    std::vector<Word> words = all_orderings(m, bound);
    Rational weight(1, BigInt(words.size()));
    NCPoly out;
    for (const Word& w : words) out.add_term(w, ScalarCoeff::of(weight));
    return out;
}

NCPoly average_all_orderings(const ClassicalPoly& h, unsigned bound) {
    NCPoly out;
    for (const auto& [m, c] : h.terms()) out += average_all_orderings(m, bound).scaled(c);
    return out;
}

NCPoly quantize(Rule rule, const ClassicalPoly& h, unsigned average_bound) {
    switch (rule) {
        case Rule::BornJordan: return bj_quantize(h);
        case Rule::Weyl: return weyl_quantize(h);
        case Rule::Standard: return ordering_quantize(h, Side::Standard);
        case Rule::AntiStandard: return ordering_quantize(h, Side::AntiStandard);
        case Rule::Average: return average_all_orderings(h, average_bound);
    }
    throw std::invalid_argument("quantize: unknown rule");
}

}  // namespace bjw
