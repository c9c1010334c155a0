// io.hpp -- JSON schemas for automata and (masked) semilinear sets, DOT export
#ifndef JUMPOMEGA_IO_HPP
#define JUMPOMEGA_IO_HPP

#include <string>

#include "jumpomega/masked.hpp"
#include "jumpomega/nfa.hpp"
#include "jumpomega/semilinear.hpp"

namespace jumpomega {

// Automaton schema:
//   {"alphabet":["a","b"],"states":["q0","q1"],"initial":["q0"],
//    "accepting":["q1"],"transitions":[{"from":"q0","letter":"a","to":"q1"}]}
Nfa parse_automaton(const std::string& json_text);
std::string print_automaton(const Nfa& a);

// Semilinear schema:
//   {"alphabet":["a","b"],"components":[{"base":{"a":1,"b":0},
//    "periods":[{"a":1,"b":1}]}]}
SemilinearSet parse_semilinear(const std::string& json_text, Alphabet* alphabet_out = nullptr);
std::string print_semilinear(const SemilinearSet& s, const Alphabet& sigma);

// Masked schema; "inf" is the literal string:
//   {"alphabet":[...],"components":[{"mask":{"a":0,"b":"inf"},
//    "set":<semilinear JSON>}]}
MaskedSemilinearSet parse_masked(const std::string& json_text);
std::string print_masked(const MaskedSemilinearSet& m);

/// Graphviz export; accepting states are double-circled.
std::string export_dot(const Nfa& a);

} // namespace jumpomega

#endif
