#include "bjw/ncpoly.hpp"

#include <cassert>

namespace bjw {

NCPoly NCPoly::scalar(const ScalarCoeff& c) {
    NCPoly r;
    r.add_term(Word(), c);
    return r;
}

NCPoly NCPoly::variable(Var v) {
    return from_word(Word::power(v, 1));
}

NCPoly NCPoly::from_word(const Word& w, const ScalarCoeff& c) {
    NCPoly r;
    r.add_term(w, c);
    return r;
}

bool NCPoly::is_central() const {
    for (const auto& [w, c] : terms_)
        if (!w.empty()) return false;
    return true;
}

bool NCPoly::is_standard_ordered() const {
    for (const auto& [w, c] : terms_)
        if (!w.is_standard()) return false;
    return true;
}

unsigned NCPoly::degree() const {
    unsigned d = 0;
    for (const auto& [w, c] : terms_) d = std::max<unsigned>(d, static_cast<unsigned>(w.size()));
    return d;
}

ScalarCoeff NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ScalarCoeff::zero() : it->second;
}

void NCPoly::add_term(const Word& w, const ScalarCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly NCPoly::scaled(const ScalarCoeff& c) const {
    NCPoly r;
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return r;
}

NCPoly NCPoly::pow(unsigned k) const {
    NCPoly r = NCPoly::one();
    for (unsigned j = 0; j < k; ++j) r = r * *this;
    return r;
}

namespace {

// Normal form of a single word. Repeatedly locates the first p-block followed
// by a q-block and reorders it with the closed-form identity
//
//   p^m q^n = sum_k (-i hbar)^k k! C(m,k) C(n,k) q^{n-k} p^{m-k},
//
// recursing on the rewritten words. Each step strictly decreases the number
// of (P,Q) inversions, so this terminates; the cache keeps the blowup linear
// in the number of distinct subwords encountered.
const NCPoly& nf_word(const Word& w, std::map<Word, NCPoly>& cache) {
    if (auto it = cache.find(w); it != cache.end()) return it->second;

    std::size_t n = w.size();
    std::size_t pos = n;  // first index with P immediately followed by Q
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (w[i] == Var::P && w[i + 1] == Var::Q) {
            pos = i;
            break;
        }
    }

    NCPoly result;
    if (pos == n) {
        result = NCPoly::from_word(w);
    } else {
        std::size_t p_begin = pos;
        while (p_begin > 0 && w[p_begin - 1] == Var::P) --p_begin;
        std::size_t q_end = pos + 1;
        while (q_end + 1 < n && w[q_end + 1] == Var::Q) ++q_end;
        unsigned m = static_cast<unsigned>(pos - p_begin + 1);
        unsigned nq = static_cast<unsigned>(q_end - pos);

        // Everything before the first inversion's p-block is q's only.
        Word prefix = w.subword(0, p_begin);
        Word suffix = w.subword(q_end + 1, n);
        assert(prefix.p_degree() == 0);

        for (unsigned k = 0; k <= std::min(m, nq); ++k) {
            GaussianRational phase = minus_i_pow(k);
            Rational mag(factorial(k) * binomial(m, k) * binomial(nq, k));
            ScalarCoeff c = ScalarCoeff::term(k, phase) * ScalarCoeff::of(mag);
            Word wk = prefix + Word::power(Var::Q, nq - k) + Word::power(Var::P, m - k) + suffix;
            result += nf_word(wk, cache).scaled(c);
        }
    }
    return cache.emplace(w, std::move(result)).first->second;
}

}  // namespace

NCPoly normal_form(const NCPoly& a) {
    std::map<Word, NCPoly> cache;
    NCPoly r;
    for (const auto& [w, c] : a.terms()) r += nf_word(w, cache).scaled(c);
    return r;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) {
    return normal_form(a * b - b * a);
}

NCPoly cyclic_derivative(const NCPoly& a, Var var) {
    NCPoly r;
    for (const auto& [w, c] : a.terms()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == var) r.add_term(w.rotated_without(k), c);
        }
    }
    return r;
}

NCPoly formal_adjoint(const NCPoly& a) {
    NCPoly r;
    for (const auto& [w, c] : a.terms()) r.add_term(w.reversed(), c.conj());
    return r;
}

bool equals_mod_ccr(const NCPoly& a, const NCPoly& b) {
    return normal_form(a) == normal_form(b);
}

NCPoly hbar_leading_part(const NCPoly& a) {
    NCPoly r;
    for (const auto& [w, c] : a.terms()) {
        GaussianRational g = c.at(0);
        if (!g.is_zero()) r.add_term(w, ScalarCoeff::term(0, g));
    }
    return r;
}

}  // namespace bjw
