#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bjw/classical.hpp"
#include "bjw/ncpoly.hpp"

namespace bjw {

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'p' | 'q' | 'hbar' | 'i' | rational | '(' expr ')'
// A rational literal is digits or digits/digits. The optional leading sign is
// needed so printed normal forms such as "-i*hbar" re-parse.
struct ExprAst {
    enum class Kind { Sum, Product, Power, Symbol, Literal };

    Kind kind = Kind::Literal;
    std::vector<ExprAst> children;  // Sum terms, Product factors, Power base
    std::vector<int> signs;         // Sum only: +1 or -1 per child
    unsigned exponent = 0;          // Power only
    char symbol = 0;                // Symbol only: 'p', 'q', 'h' (hbar), 'i'
    Rational literal = Rational(0);
};

enum class ParseMode { Classical, Noncommutative };

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, bool mode_error, const std::string& message)
        : std::runtime_error(message), pos_(pos), mode_error_(mode_error) {}

    std::size_t pos() const { return pos_; }
    // True for inputs that are grammatical but illegal in the requested mode
    // (hbar or i in a classical expression).
    bool is_mode_error() const { return mode_error_; }

private:
    std::size_t pos_;
    bool mode_error_;
};

ExprAst parse(std::string_view input, ParseMode mode);

NCPoly eval_noncommutative(const ExprAst& ast);
ClassicalPoly eval_classical(const ExprAst& ast);

NCPoly parse_noncommutative(std::string_view input);
ClassicalPoly parse_classical(std::string_view input);

}  // namespace bjw
