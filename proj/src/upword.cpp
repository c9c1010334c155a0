#include "jumpomega/upword.hpp"

#include "jumpomega/base.hpp"

#include <vector>

namespace jumpomega {

namespace {

// Length of the primitive root of v, via the KMP failure function.
std::size_t primitive_root_length(const std::string& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> border(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && v[i] != v[k]) k = border[k];
        if (v[i] == v[k]) ++k;
        border[i + 1] = k;
    }
    const std::size_t p = n - border[n];
    return (n % p == 0) ? p : n;
}

} // namespace

void UpWord::normalize() {
    period_.resize(primitive_root_length(period_));
    // u.(xs)^w = ux.(sx)^w in reverse: absorb a trailing u-letter into the
    // period whenever it matches the period's last letter.
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
        period_.pop_back();
        period_.insert(period_.begin(), prefix_.back());
        prefix_.pop_back();
    }
}

UpWord UpWord::parse(const std::string& text) {
    const auto sep = text.find(';');
    if (sep == std::string::npos)
        throw ParseError("upword: expected `u;v` syntax, missing ';' in \"" + text + "\"");
    std::string u = text.substr(0, sep);
    std::string v = text.substr(sep + 1);
    if (v.empty()) throw ParseError("upword: period must be nonempty in \"" + text + "\"");
    if (v.find(';') != std::string::npos)
        throw ParseError("upword: more than one ';' in \"" + text + "\"");
    return UpWord(std::move(u), std::move(v));
}

} // namespace jumpomega
