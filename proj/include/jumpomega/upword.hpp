// upword.hpp -- ultimately periodic words u.v^omega
#ifndef JUMPOMEGA_UPWORD_HPP
#define JUMPOMEGA_UPWORD_HPP

#include <stdexcept>
#include <string>

namespace jumpomega {

// An omega-word of the form u.v^omega. Equality is semantic: two
// representations denote the same word iff their normal forms coincide.
// The normal form has the primitive (shortest) period and the period
// boundary shifted left as far as possible.
class UpWord {
public:
    UpWord(std::string prefix, std::string period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {
        if (period_.empty()) throw std::invalid_argument("upword: empty period");
        normalize();
    }

    /// Parses the `u;v` text syntax (empty u allowed, v nonempty).
    static UpWord parse(const std::string& text);

    const std::string& prefix() const { return prefix_; }
    const std::string& period() const { return period_; }

    /// Letter at position i of u.v^omega.
    char at(std::size_t i) const {
        if (i < prefix_.size()) return prefix_[i];
        return period_[(i - prefix_.size()) % period_.size()];
    }

    std::string text() const { return prefix_ + ";" + period_; }

    bool operator==(const UpWord& o) const {
        return prefix_ == o.prefix_ && period_ == o.period_;
    }
    bool operator!=(const UpWord& o) const { return !(*this == o); }
    bool operator<(const UpWord& o) const {
        if (prefix_ != o.prefix_) return prefix_ < o.prefix_;
        return period_ < o.period_;
    }

private:
    void normalize();

    std::string prefix_;
    std::string period_;
};

} // namespace jumpomega

#endif
