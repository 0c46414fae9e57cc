#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bjw {

enum class Var : std::uint8_t { Q = 0, P = 1 };

// A word over the alphabet {Q, P}. The empty word is the algebra identity.
// Words are ordered by (Q-degree, P-degree, letters lexicographically), which
// makes term ordering in printed output deterministic.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Var> letters) : letters_(std::move(letters)) {}

    static Word power(Var v, unsigned n);
    // "pqp" / "PQP" -> word p*q*p; anything but p/q throws std::invalid_argument.
    static Word from_letters(std::string_view s);

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    Var operator[](std::size_t k) const { return letters_[k]; }

    unsigned degree(Var v) const;
    unsigned q_degree() const { return degree(Var::Q); }
    unsigned p_degree() const { return degree(Var::P); }

    // All Q letters before all P letters (the normal-form shape q^a p^b).
    bool is_standard() const;

    Word reversed() const;
    // Word read cyclically starting at index k, with the letter at k removed.
    Word rotated_without(std::size_t k) const;
    // Cyclic rotation starting at index k.
    Word rotated(std::size_t k) const;
    Word subword(std::size_t begin, std::size_t end) const;

    friend Word operator+(const Word& a, const Word& b);

    const std::vector<Var>& letters() const { return letters_; }

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& o) const;

private:
    std::vector<Var> letters_;
};

}  // namespace bjw
