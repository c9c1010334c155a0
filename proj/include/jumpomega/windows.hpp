// windows.hpp -- k-window and existential-window jumping semantics
#ifndef JUMPOMEGA_WINDOWS_HPP
#define JUMPOMEGA_WINDOWS_HPP

#include <optional>

#include "jumpomega/jumping.hpp"
#include "jumpomega/nfa.hpp"

namespace jumpomega {

/// The Buchi automaton B_k with L(B_k) = Jk(a): states buffer the Parikh
/// image of the current window; completing a window jumps to every state
/// reachable on some realization of it, with an accepting copy marking
/// realizations that pass through alpha.
BuchiAutomaton kwindow_construct(const BuchiAutomaton& a, int k, const Caps& caps = {});

/// Is u.v^omega in the k-window jumping language of a?
bool kwindow_member_up(const BuchiAutomaton& a, int k, const UpWord& w, const Caps& caps = {});

/// An automaton b with existential-window language equal to J(a): the
/// masked-set components drive word automata whose accepting states feed a
/// generalized-Buchi tail requiring every masked letter infinitely often.
BuchiAutomaton ewindow_construct(const BuchiAutomaton& a, const Caps& caps = {});

// Result of the bounded membership search. Finding a witness k is sound;
// exhausting kmax is inconclusive.
struct EwindowResult {
    std::optional<int> witness_k;
    int kmax = 0;

    bool found() const { return witness_k.has_value(); }
};

/// Least k <= kmax with w in Jk(a), if any.
EwindowResult ewindow_member_bounded(const BuchiAutomaton& a, const UpWord& w, int kmax,
                                     const Caps& caps = {});

} // namespace jumpomega

#endif
