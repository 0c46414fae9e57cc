#pragma once

// Test-only helpers: an independent brute-force rewriter for cross-checking
// normal forms, plus seeded random generators for property tests.

#include <random>
#include <utility>
#include <vector>

#include "bjw/ncpoly.hpp"

namespace bjw::testing {

// Single-step rewriter: repeatedly replaces the leftmost adjacent (P, Q) pair
// using pq = qp - i*hbar, one pair at a time, until every word is standard.
// Deliberately shares no code with normal_form.
inline NCPoly oracle_normal_form(const NCPoly& a) {
    const ScalarCoeff minus_i_hbar = -(ScalarCoeff::i() * ScalarCoeff::hbar());
    std::vector<std::pair<Word, ScalarCoeff>> work(a.terms().begin(), a.terms().end());
    NCPoly out;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t pos = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] == Var::P && w[k + 1] == Var::Q) {
                pos = k;
                break;
            }
        }
        if (pos == w.size()) {
            out.add_term(w, c);
            continue;
        }
        std::vector<Var> swapped = w.letters();
        std::swap(swapped[pos], swapped[pos + 1]);
        std::vector<Var> contracted;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k != pos && k != pos + 1) contracted.push_back(w[k]);
        }
        work.emplace_back(Word(std::move(swapped)), c);
        work.emplace_back(Word(std::move(contracted)), c * minus_i_hbar);
    }
    return out;
}

inline Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(0, 1);
    int len = len_dist(rng);
    std::vector<Var> letters;
    letters.reserve(len);
    for (int k = 0; k < len; ++k) letters.push_back(letter_dist(rng) ? Var::P : Var::Q);
    return Word(std::move(letters));
}

inline ScalarCoeff random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num_dist(-4, 4);
    std::uniform_int_distribution<int> den_dist(1, 4);
    std::uniform_int_distribution<int> hbar_dist(0, 2);
    ScalarCoeff c;
    GaussianRational g(Rational(num_dist(rng), den_dist(rng)), Rational(num_dist(rng), den_dist(rng)));
    c.add(hbar_dist(rng), g);
    return c;
}

inline NCPoly random_ncpoly(std::mt19937& rng, int max_terms, int max_len) {
    std::uniform_int_distribution<int> term_dist(0, max_terms);
    NCPoly a;
    int terms = term_dist(rng);
    for (int k = 0; k < terms; ++k) a.add_term(random_word(rng, max_len), random_scalar(rng));
    return a;
}

}  // namespace bjw::testing
