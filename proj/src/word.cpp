#include "bjw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace bjw {

Word Word::power(Var v, unsigned n) {
    return Word(std::vector<Var>(n, v));
}

Word Word::from_letters(std::string_view s) {
    std::vector<Var> letters;
    letters.reserve(s.size());
    for (char c : s) {
        if (c == 'p' || c == 'P')
            letters.push_back(Var::P);
        else if (c == 'q' || c == 'Q')
            letters.push_back(Var::Q);
        else
            throw std::invalid_argument("Word::from_letters: bad letter");
    }
    return Word(std::move(letters));
}

unsigned Word::degree(Var v) const {
    return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), v));
}

bool Word::is_standard() const {
    bool seen_p = false;
    for (Var v : letters_) {
        if (v == Var::P)
            seen_p = true;
        else if (seen_p)
            return false;
    }
    return true;
}

Word Word::reversed() const {
    return Word(std::vector<Var>(letters_.rbegin(), letters_.rend()));
}

Word Word::rotated_without(std::size_t k) const {
    std::vector<Var> out;
    out.reserve(letters_.size() - 1);
    for (std::size_t j = 1; j < letters_.size(); ++j) out.push_back(letters_[(k + j) % letters_.size()]);
    return Word(std::move(out));
}

Word Word::rotated(std::size_t k) const {
    std::vector<Var> out;
    out.reserve(letters_.size());
    for (std::size_t j = 0; j < letters_.size(); ++j) out.push_back(letters_[(k + j) % letters_.size()]);
    return Word(std::move(out));
}

Word Word::subword(std::size_t begin, std::size_t end) const {
    return Word(std::vector<Var>(letters_.begin() + begin, letters_.begin() + end));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Var> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = q_degree() <=> o.q_degree(); c != 0) return c;
    if (auto c = p_degree() <=> o.p_degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        letters_.begin(), letters_.end(), o.letters_.begin(), o.letters_.end(),
        [](Var a, Var b) { return static_cast<int>(a) <=> static_cast<int>(b); });
}

}  // namespace bjw
