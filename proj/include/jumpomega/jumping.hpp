// jumping.hpp -- jumping languages of Buchi automata: the correspondence
// with masked semilinear sets, constructive closure and decision procedures
#ifndef JUMPOMEGA_JUMPING_HPP
#define JUMPOMEGA_JUMPING_HPP

#include <set>

#include "jumpomega/masked.hpp"
#include "jumpomega/nfa.hpp"

namespace jumpomega {

/// I(t): the masks realizable by infinite concatenations of words of t.
/// A mask over Gamma qualifies iff every letter of Gamma occurs in some
/// word of L_fin(t) that uses only letters of Gamma.
std::set<Mask> compute_mask_set(const Nfa& t);

/// Psi(J(a)) as a canonical oblivious masked semilinear set, through the
/// omega-regular decomposition and Parikh images of the S.T* pieces.
MaskedSemilinearSet jumping_parikh(const BuchiAutomaton& a, const Caps& caps = {});

/// A deterministic Buchi automaton d with Psi(J(d)) equal to the given
/// set: per linear component a DFA over representative words with an
/// attached cycle for the masked letters, combined by the determinism-
/// preserving union product.
BuchiAutomaton masked_to_dba(const MaskedSemilinearSet& m, const Caps& caps = {});

/// Is u.v^omega in the jumping language of a?
bool jumping_member_up(const BuchiAutomaton& a, const UpWord& w, const Caps& caps = {});

enum class ClosureKind { Union, Intersection, Complement, Determinize };

/// Closure constructions on jumping languages. All outputs except Union
/// are deterministic.
BuchiAutomaton jumping_closure(ClosureKind kind, const BuchiAutomaton& a,
                               const BuchiAutomaton* b = nullptr, const Caps& caps = {});

enum class DecisionKind { Empty, Containment, Equivalence, Universality };

bool jumping_decide(DecisionKind kind, const BuchiAutomaton& a,
                    const BuchiAutomaton* b = nullptr, const Caps& caps = {});

/// One accepting state with self-loops on every letter: J = Sigma^omega.
BuchiAutomaton universal_automaton(const Alphabet& sigma);

} // namespace jumpomega

#endif
