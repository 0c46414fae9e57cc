#include "bjw/parser.hpp"

#include <cctype>

namespace bjw {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Token {
    enum class Kind { Plus, Minus, Star, Caret, LParen, RParen, Number, Symbol, End };

    Kind kind = Kind::End;
    std::size_t pos = 0;
    char symbol = 0;        // Symbol
    Rational value;         // Number
    bool is_integer = true; // Number: no '/' in the literal
};

class Lexer {
public:
    Lexer(std::string_view input, ParseMode mode) : input_(input), mode_(mode) { advance(); }

    const Token& current() const { return token_; }

    Token take() {
        Token t = token_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
        throw ParseError(pos, false, msg);
    }

    void advance() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
        token_ = Token{};
        token_.pos = pos_;
        if (pos_ >= input_.size()) {
            token_.kind = Token::Kind::End;
            return;
        }
        char c = input_[pos_];
        switch (c) {
            case '+': token_.kind = Token::Kind::Plus; ++pos_; return;
            case '-': token_.kind = Token::Kind::Minus; ++pos_; return;
            case '*': token_.kind = Token::Kind::Star; ++pos_; return;
            case '^': token_.kind = Token::Kind::Caret; ++pos_; return;
            case '(': token_.kind = Token::Kind::LParen; ++pos_; return;
            case ')': token_.kind = Token::Kind::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            lex_symbol();
            return;
        }
        fail(pos_, "unexpected character");
    }

    void lex_number() {
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
        BigInt num(std::string(input_.substr(start, pos_ - start)));
        BigInt den = 1;
        token_.is_integer = true;
        if (pos_ < input_.size() && input_[pos_] == '/' && pos_ + 1 < input_.size() &&
            std::isdigit(static_cast<unsigned char>(input_[pos_ + 1]))) {
            std::size_t slash = pos_;
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) ++pos_;
            den = BigInt(std::string(input_.substr(dstart, pos_ - dstart)));
            if (den == 0) fail(slash, "zero denominator in rational literal");
            token_.is_integer = false;
        }
        token_.kind = Token::Kind::Number;
        token_.value = Rational(num, den);
    }

    void lex_symbol() {
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isalpha(static_cast<unsigned char>(input_[pos_]))) ++pos_;
        std::string_view name = input_.substr(start, pos_ - start);
        token_.kind = Token::Kind::Symbol;
        if (name == "p")
            token_.symbol = 'p';
        else if (name == "q")
            token_.symbol = 'q';
        else if (name == "i")
            token_.symbol = 'i';
        else if (name == "hbar")
            token_.symbol = 'h';
        else
            fail(start, "unknown symbol '" + std::string(name) + "'");
        if (mode_ == ParseMode::Classical && (token_.symbol == 'h' || token_.symbol == 'i')) {
            throw ParseError(start, true,
                             std::string("symbol '") + (token_.symbol == 'h' ? "hbar" : "i") +
                                 "' not allowed in classical mode");
        }
    }

    std::string_view input_;
    ParseMode mode_;
    std::size_t pos_ = 0;
    Token token_;
};

class Parser {
public:
    Parser(std::string_view input, ParseMode mode) : lexer_(input, mode) {}

    ExprAst run() {
        ExprAst e = parse_expr();
        if (lexer_.current().kind != Token::Kind::End)
            throw ParseError(lexer_.current().pos, false, "unexpected trailing input");
        return e;
    }

private:
    ExprAst parse_expr() {
        ExprAst sum;
        sum.kind = ExprAst::Kind::Sum;
        int sign = 1;
        if (lexer_.current().kind == Token::Kind::Plus) {
            lexer_.take();
        } else if (lexer_.current().kind == Token::Kind::Minus) {
            lexer_.take();
            sign = -1;
        }
        sum.children.push_back(parse_term());
        sum.signs.push_back(sign);
        while (lexer_.current().kind == Token::Kind::Plus ||
               lexer_.current().kind == Token::Kind::Minus) {
            int s = lexer_.take().kind == Token::Kind::Plus ? 1 : -1;
            sum.children.push_back(parse_term());
            sum.signs.push_back(s);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
        return sum;
    }

    ExprAst parse_term() {
        ExprAst product;
        product.kind = ExprAst::Kind::Product;
        product.children.push_back(parse_factor());
        while (lexer_.current().kind == Token::Kind::Star) {
            lexer_.take();
            product.children.push_back(parse_factor());
        }
        if (product.children.size() == 1) return std::move(product.children[0]);
        return product;
    }

    ExprAst parse_factor() {
        ExprAst base = parse_base();
        if (lexer_.current().kind != Token::Kind::Caret) return base;
        lexer_.take();
        const Token& t = lexer_.current();
        if (t.kind != Token::Kind::Number || !t.is_integer)
            throw ParseError(t.pos, false, "expected unsigned integer exponent");
        BigInt e = numerator(t.value);
        if (e > kMaxExponent)
            throw ParseError(t.pos, false, "exponent exceeds limit " + std::to_string(kMaxExponent));
        lexer_.take();
        ExprAst power;
        power.kind = ExprAst::Kind::Power;
        power.exponent = e.convert_to<unsigned>();
        power.children.push_back(std::move(base));
        return power;
    }

    ExprAst parse_base() {
        const Token& t = lexer_.current();
        ExprAst node;
        switch (t.kind) {
            case Token::Kind::Symbol:
                node.kind = ExprAst::Kind::Symbol;
                node.symbol = t.symbol;
                lexer_.take();
                return node;
            case Token::Kind::Number:
                node.kind = ExprAst::Kind::Literal;
                node.literal = t.value;
                lexer_.take();
                return node;
            case Token::Kind::LParen: {
                lexer_.take();
                ExprAst inner = parse_expr();
                if (lexer_.current().kind != Token::Kind::RParen)
                    throw ParseError(lexer_.current().pos, false, "expected ')'");
                lexer_.take();
                return inner;
            }
            default:
                throw ParseError(t.pos, false,
                                 "expected 'p', 'q', 'hbar', 'i', a rational literal, or '('");
        }
    }

    Lexer lexer_;
};

}  // namespace

ExprAst parse(std::string_view input, ParseMode mode) {
    return Parser(input, mode).run();
}

NCPoly eval_noncommutative(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::Sum: {
            NCPoly acc;
            for (std::size_t k = 0; k < ast.children.size(); ++k) {
                NCPoly child = eval_noncommutative(ast.children[k]);
                if (ast.signs[k] < 0)
                    acc -= child;
                else
                    acc += child;
            }
            return acc;
        }
        case ExprAst::Kind::Product: {
            NCPoly acc = NCPoly::one();
            for (const ExprAst& child : ast.children) acc = acc * eval_noncommutative(child);
            return acc;
        }
        case ExprAst::Kind::Power:
            return eval_noncommutative(ast.children[0]).pow(ast.exponent);
        case ExprAst::Kind::Symbol:
            switch (ast.symbol) {
                case 'p': return NCPoly::variable(Var::P);
                case 'q': return NCPoly::variable(Var::Q);
                case 'h': return NCPoly::scalar(ScalarCoeff::hbar());
                default: return NCPoly::scalar(ScalarCoeff::i());
            }
        case ExprAst::Kind::Literal:
            return NCPoly::scalar(ScalarCoeff::of(ast.literal));
    }
    throw std::logic_error("eval_noncommutative: bad AST node");
}

ClassicalPoly eval_classical(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::Sum: {
            ClassicalPoly acc;
            for (std::size_t k = 0; k < ast.children.size(); ++k) {
                ClassicalPoly child = eval_classical(ast.children[k]);
                if (ast.signs[k] < 0)
                    acc -= child;
                else
                    acc += child;
            }
            return acc;
        }
        case ExprAst::Kind::Product: {
            ClassicalPoly acc = ClassicalPoly::one();
            for (const ExprAst& child : ast.children) acc = acc * eval_classical(child);
            return acc;
        }
        case ExprAst::Kind::Power:
            return eval_classical(ast.children[0]).pow(ast.exponent);
        case ExprAst::Kind::Symbol:
            // hbar and i are rejected at parse time in classical mode.
            return ClassicalPoly::variable(ast.symbol == 'p' ? Var::P : Var::Q);
        case ExprAst::Kind::Literal:
            return ClassicalPoly::monomial({0, 0}, ast.literal);
    }
    throw std::logic_error("eval_classical: bad AST node");
}

NCPoly parse_noncommutative(std::string_view input) {
    return eval_noncommutative(parse(input, ParseMode::Noncommutative));
}

ClassicalPoly parse_classical(std::string_view input) {
    return eval_classical(parse(input, ParseMode::Classical));
}

}  // namespace bjw
