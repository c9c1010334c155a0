// alphabet.hpp -- ordered finite alphabet of single-character letters
#ifndef JUMPOMEGA_ALPHABET_HPP
#define JUMPOMEGA_ALPHABET_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumpomega {

// The letter order is fixed and defines the coordinate order of every
// vector built over the alphabet.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string letters) {
        for (char c : letters) add_letter(c);
        if (letters_.empty()) throw std::invalid_argument("alphabet: must be nonempty");
    }
    Alphabet(std::initializer_list<char> letters) {
        for (char c : letters) add_letter(c);
        if (letters_.empty()) throw std::invalid_argument("alphabet: must be nonempty");
    }

    int size() const { return static_cast<int>(letters_.size()); }
    char letter(int i) const { return letters_.at(static_cast<std::size_t>(i)); }
    const std::vector<char>& letters() const { return letters_; }

    bool contains(char c) const {
        for (char l : letters_)
            if (l == c) return true;
        return false;
    }

    int index(char c) const {
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i] == c) return static_cast<int>(i);
        throw std::invalid_argument(std::string("alphabet: unknown letter '") + c + "'");
    }

    bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    void add_letter(char c) {
        if (contains(c)) throw std::invalid_argument("alphabet: duplicate letter");
        letters_.push_back(c);
    }

    std::vector<char> letters_;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": alphabet mismatch");
}

} // namespace jumpomega

#endif
