#include "bjw/printer.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bjw {

namespace {

std::string rational_str(const Rational& r) {
    return r.str();
}

void append_factor(std::string& body, const std::string& f) {
    if (!body.empty()) body += "*";
    body += f;
}

std::string power_str(const std::string& base, unsigned k) {
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

std::string word_str(const Word& w) {
    std::string body;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        append_factor(body, power_str(w[i] == Var::Q ? "q" : "p", static_cast<unsigned>(j - i)));
        i = j;
    }
    return body;
}

// A single printable addend: sign plus "*"-joined factors.
struct Piece {
    bool negative = false;
    std::string body;
};

// g is nonzero; k is the hbar power; tail is the word factors (may be empty).
Piece monomial_piece(const GaussianRational& g, unsigned k, const std::string& tail) {
    Piece piece;
    std::string body;
    if (g.is_real() || g.is_imaginary()) {
        const Rational& part = g.is_real() ? g.re : g.im;
        piece.negative = part < 0;
        Rational mag = part < 0 ? Rational(-part) : part;
        bool has_other = !g.is_real() || k > 0 || !tail.empty();
        if (mag != 1 || !has_other) append_factor(body, rational_str(mag));
        if (!g.is_real()) append_factor(body, "i");
    } else {
        // Mixed real and imaginary part: parenthesized Gaussian coefficient.
        std::string inner = rational_str(g.re);
        inner += g.im < 0 ? " - " : " + ";
        Rational mag = g.im < 0 ? Rational(-g.im) : g.im;
        if (mag != 1) inner += rational_str(mag) + "*";
        inner += "i";
        append_factor(body, "(" + inner + ")");
    }
    if (k > 0) append_factor(body, power_str("hbar", k));
    if (!tail.empty()) append_factor(body, tail);
    piece.body = std::move(body);
    return piece;
}

std::string join_pieces(const std::vector<Piece>& pieces) {
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0) {
            if (pieces[i].negative) out += "-";
        } else {
            out += pieces[i].negative ? " - " : " + ";
        }
        out += pieces[i].body;
    }
    return out;
}

std::vector<Piece> scalar_pieces(const ScalarCoeff& c, const std::string& tail) {
    std::vector<Piece> pieces;
    for (const auto& [k, g] : c.terms()) pieces.push_back(monomial_piece(g, k, tail));
    return pieces;
}

}  // namespace

std::string to_string(const Rational& r) { return rational_str(r); }

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    return word_str(w);
}

std::string to_string(const ScalarCoeff& c) {
    if (c.is_zero()) return "0";
    return join_pieces(scalar_pieces(c, ""));
}

std::string to_string(const NCPoly& a) {
    if (a.is_zero()) return "0";
    std::vector<Piece> pieces;
    // Reverse map order: highest (Q-degree, P-degree) first.
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        std::string tail = w.empty() ? std::string() : word_str(w);
        if (c.terms().size() == 1) {
            const auto& [k, g] = *c.terms().begin();
            pieces.push_back(monomial_piece(g, k, tail));
        } else {
            Piece piece;
            piece.body = "(" + join_pieces(scalar_pieces(c, "")) + ")";
            if (!tail.empty()) piece.body += "*" + tail;
            pieces.push_back(std::move(piece));
        }
    }
    return join_pieces(pieces);
}

std::string to_string(const ClassicalMonomial& m) {
    std::string body;
    if (m.s > 0) append_factor(body, power_str("p", m.s));
    if (m.r > 0) append_factor(body, power_str("q", m.r));
    if (body.empty()) return "1";
    return body;
}

std::string to_string(const ClassicalPoly& h) {
    if (h.is_zero()) return "0";
    std::vector<std::pair<ClassicalMonomial, Rational>> terms(h.terms().begin(), h.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() > b.first.total_degree();
        return a.first.s > b.first.s;
    });
    std::vector<Piece> pieces;
    for (const auto& [m, c] : terms) {
        Piece piece;
        piece.negative = c < 0;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string body;
        std::string tail = m.total_degree() == 0 ? std::string() : to_string(m);
        if (mag != 1 || tail.empty()) append_factor(body, rational_str(mag));
        if (!tail.empty()) append_factor(body, tail);
        piece.body = std::move(body);
        pieces.push_back(std::move(piece));
    }
    return join_pieces(pieces);
}

}  // namespace bjw
