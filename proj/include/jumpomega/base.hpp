// base.hpp -- shared integer type, resource caps and error types
#ifndef JUMPOMEGA_BASE_HPP
#define JUMPOMEGA_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace jumpomega {

// Arbitrary-precision integer. Quantifier elimination multiplies
// coefficients by lcms, so fixed-width arithmetic is not an option.
using Int = boost::multiprecision::cpp_int;

/// Thrown when a construction exceeds its resource budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed external input (JSON, word syntax).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Budgets for the inherently exponential constructions.
struct Caps {
    std::uint64_t dnf_atoms = 1'000'000;      // atoms in a DNF expansion
    std::uint64_t hilbert_nodes = 10'000;     // Contejean-Devie frontier nodes
    std::uint64_t search_nodes = 2'000'000;   // path/residue/window enumeration nodes
    std::uint64_t automaton_states = 200'000; // states of a constructed automaton

    static Caps uniform(std::uint64_t n) {
        Caps c;
        c.dnf_atoms = n;
        c.hilbert_nodes = n;
        c.search_nodes = n;
        c.automaton_states = n;
        return c;
    }
};

inline long long to_longlong(const Int& v, const char* what) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw ResourceError(std::string(what) + ": value out of printable range");
    return static_cast<long long>(v);
}

} // namespace jumpomega

#endif
