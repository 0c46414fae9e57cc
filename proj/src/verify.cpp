#include "bjw/verify.hpp"

#include <stdexcept>

namespace bjw {

namespace {

const NCPoly kQ = NCPoly::variable(Var::Q);
const NCPoly kP = NCPoly::variable(Var::P);
const ScalarCoeff kIHbar = ScalarCoeff::i() * ScalarCoeff::hbar();

}  // namespace

bool check_eq7(unsigned m, unsigned n) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_eq7: m and n must be >= 1");
    NCPoly pm = NCPoly::from_word(Word::power(Var::P, m));
    NCPoly qn = NCPoly::from_word(Word::power(Var::Q, n));
    NCPoly lhs = pm * qn - qn * pm;

    NCPoly sum;
    for (unsigned l = 0; l < n; ++l) {
        Word w = Word::power(Var::Q, n - 1 - l) + Word::power(Var::P, m - 1) + Word::power(Var::Q, l);
        sum.add_term(w, ScalarCoeff::one());
    }
    NCPoly rhs = sum.scaled(-kIHbar * ScalarCoeff::of(Rational(m)));
    return equals_mod_ccr(lhs, rhs);
}

std::pair<NCPoly, NCPoly> eom_residuals(const NCPoly& h) {
    NCPoly rq = normal_form(h * kQ - kQ * h + cyclic_derivative(h, Var::P).scaled(kIHbar));
    NCPoly rp = normal_form(h * kP - kP * h - cyclic_derivative(h, Var::Q).scaled(kIHbar));
    return {std::move(rq), std::move(rp)};
}

std::pair<bool, bool> check_eq11(Rule rule, const ClassicalMonomial& m) {
    NCPoly h = quantize(rule, ClassicalPoly::monomial(m));
    auto [rq, rp] = eom_residuals(h);
    return {rq.is_zero(), rp.is_zero()};
}

OrderingVector rule_weights(Rule rule, const ClassicalMonomial& m) {
    NCPoly h = quantize(rule, ClassicalPoly::monomial(m));
    OrderingVector v;
    v.monomial = m;
    for (const auto& [w, c] : h.terms()) {
        GaussianRational g = c.at(0);
        if (!g.is_real()) throw std::invalid_argument("rule_weights: non-real word weight");
        if (g.re != 0) v.weights[w] = g.re;
    }
    return v;
}

NCPoly apply_ordering(const OrderingVector& v) {
    NCPoly h;
    for (const auto& [w, c] : v.weights) h.add_term(w, ScalarCoeff::of(c));
    return h;
}

bool weights_satisfy_conditions(const OrderingVector& v) {
    Rational total(0);
    for (const auto& [w, c] : v.weights) total += c;
    if (total != 1) return false;
    auto [rq, rp] = eom_residuals(apply_ordering(v));
    return rq.is_zero() && rp.is_zero();
}

SolutionSpace ordering_solution_space(const ClassicalMonomial& m, unsigned bound) {
    SolutionSpace space;
    space.monomial = m;
    space.words = all_orderings(m, bound);
    const std::size_t n_words = space.words.size();

    // Residuals are linear in the weights; matching coefficients per standard
    // word, hbar power and real/imaginary part gives exact rational equations.
    struct RowKey {
        bool p_condition;
        Word word;
        unsigned hbar_power;
        bool imag;
        auto operator<=>(const RowKey&) const = default;
    };
    std::map<RowKey, std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n_words; ++i) {
        auto [rq, rp] = eom_residuals(NCPoly::from_word(space.words[i]));
        for (bool p_condition : {false, true}) {
            const NCPoly& res = p_condition ? rp : rq;
            for (const auto& [w, c] : res.terms()) {
                for (const auto& [k, g] : c.terms()) {
                    for (bool imag : {false, true}) {
                        const Rational& part = imag ? g.im : g.re;
                        if (part == 0) continue;
                        auto [it, inserted] = rows.emplace(RowKey{p_condition, w, k, imag},
                                                           std::vector<Rational>(n_words, Rational(0)));
                        it->second[i] = part;
                    }
                }
            }
        }
    }

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(rows.size() + 1);
    a.emplace_back(n_words, Rational(1));  // normalization
    b.emplace_back(1);
    for (auto& [key, row] : rows) {
        a.push_back(std::move(row));
        b.emplace_back(0);
    }

    AffineSolution sol = solve_exact(a, b);
    space.feasible = sol.feasible;
    if (!sol.feasible) return space;

    space.particular.monomial = m;
    for (std::size_t i = 0; i < n_words; ++i) {
        if (sol.particular[i] != 0) space.particular.weights[space.words[i]] = sol.particular[i];
    }
    for (const auto& basis_vec : sol.nullspace) {
        std::map<Word, Rational> bv;
        for (std::size_t i = 0; i < n_words; ++i) {
            if (basis_vec[i] != 0) bv[space.words[i]] = basis_vec[i];
        }
        space.nullspace_basis.push_back(std::move(bv));
    }
    space.dimension = space.nullspace_basis.size();
    return space;
}

bool solution_space_contains(const SolutionSpace& space, const OrderingVector& v) {
    if (!space.feasible) return false;
    const std::size_t n_words = space.words.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < n_words; ++i) index.emplace(space.words[i], i);

    // Empty optional: the weights use a word outside the space's ordering set.
    auto to_vec = [&](const std::map<Word, Rational>& weights) -> std::optional<std::vector<Rational>> {
        std::vector<Rational> out(n_words, Rational(0));
        for (const auto& [w, c] : weights) {
            auto it = index.find(w);
            if (it == index.end()) {
                if (c != 0) return std::nullopt;
                continue;
            }
            out[it->second] = c;
        }
        return out;
    };
    auto target = to_vec(v.weights);
    if (!target) return false;

    AffineSolution aff;
    aff.feasible = true;
    aff.particular = *to_vec(space.particular.weights);
    for (const auto& bv : space.nullspace_basis) aff.nullspace.push_back(*to_vec(bv));
    return affine_contains(aff, *target);
}

BjWeylDifference bj_weyl_difference(const ClassicalMonomial& m) {
    ClassicalPoly h = ClassicalPoly::monomial(m);
    BjWeylDifference d;
    d.difference = normal_form(bj_quantize(h) - weyl_quantize(h));
    d.central = d.difference.is_central();
    return d;
}

std::optional<ClassicalMonomial> smallest_noncentral_difference(unsigned bound) {
    if (bound > 12) throw std::invalid_argument("smallest_noncentral_difference: bound must be <= 12");
    for (unsigned d = 0; d <= bound; ++d) {
        for (unsigned s = 0; s <= d; ++s) {
            ClassicalMonomial m{s, d - s};
            if (!bj_weyl_difference(m).central) return m;
        }
    }
    return std::nullopt;
}

}  // namespace bjw
