// nfa.hpp -- finite-word NFAs and Buchi automata over the same structure
#ifndef JUMPOMEGA_NFA_HPP
#define JUMPOMEGA_NFA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumpomega/alphabet.hpp"
#include "jumpomega/base.hpp"
#include "jumpomega/upword.hpp"

namespace jumpomega {

// A nondeterministic automaton <Sigma, Q, delta, Q0, alpha>. States are
// indices into `state_names`; `initial` and `accepting` are kept sorted.
// The same structure is read either over finite words (acceptance at the
// end of the run) or, as BuchiAutomaton, over infinite words (acceptance
// set visited infinitely often). There are no epsilon transitions.
class Nfa {
public:
    Alphabet alphabet;
    std::vector<std::string> state_names;
    std::vector<int> initial;
    std::vector<int> accepting;
    // delta[q][letter] = sorted list of successor states
    std::vector<std::vector<std::vector<int>>> delta;

    Nfa() = default;
    explicit Nfa(Alphabet sigma) : alphabet(std::move(sigma)) {}

    int num_states() const { return static_cast<int>(state_names.size()); }

    int add_state(std::string name) {
        state_names.push_back(std::move(name));
        delta.emplace_back(static_cast<std::size_t>(alphabet.size()));
        return num_states() - 1;
    }

    void add_transition(int from, int letter, int to);
    void add_transition(int from, char letter, int to) {
        add_transition(from, alphabet.index(letter), to);
    }
    bool has_transition(int from, int letter, int to) const;

    void mark_initial(int q);
    void mark_accepting(int q);

    bool is_initial(int q) const;
    bool is_accepting(int q) const;

    /// Single initial state and exactly one successor per state and letter.
    bool is_deterministic() const;

    /// Convenience builder: states named q0..q{n-1}.
    static Nfa with_states(const Alphabet& sigma, int n);
};

// Identical structure; runs accept by visiting `accepting` infinitely often.
struct BuchiAutomaton : Nfa {
    BuchiAutomaton() = default;
    explicit BuchiAutomaton(Alphabet sigma) : Nfa(std::move(sigma)) {}
    explicit BuchiAutomaton(Nfa n) : Nfa(std::move(n)) {}
};

// -- finite-word operations --------------------------------------------

bool nfa_accepts(const Nfa& a, const std::string& word);

/// Language union; operands must share the alphabet.
Nfa nfa_union(const Nfa& a, const Nfa& b);
/// Language concatenation (epsilon-free construction).
Nfa nfa_concat(const Nfa& a, const Nfa& b);
/// Kleene star.
Nfa nfa_star(const Nfa& a);
/// Intersection by the product construction.
Nfa nfa_product_intersection(const Nfa& a, const Nfa& b);
/// Removes transitions on letters outside `gamma`; alphabet is kept.
Nfa nfa_restrict_alphabet(const Nfa& a, const std::vector<char>& gamma);

/// Is the finite-word language empty?
bool nfa_is_empty(const Nfa& a);

/// Restriction to useful states (reachable and co-reachable). Preserves
/// the finite-word language; states are renumbered.
Nfa nfa_trim(const Nfa& a);

/// Complete-DFA subset construction (sink state included).
Nfa nfa_determinize(const Nfa& a, const Caps& caps = {});

// -- omega-word operations ---------------------------------------------

/// Membership of an ultimately periodic word, by lasso search in the
/// product of the automaton with the position graph of u.v^omega.
bool buchi_accepts_up(const BuchiAutomaton& a, const UpWord& w);

/// A witness u.v^omega with an accepting run, if the language is nonempty.
std::optional<UpWord> buchi_emptiness(const BuchiAutomaton& a);

/// The omega-regular decomposition L(a) = union of S_q . T_q^omega over
/// accepting states q; S_q accepts with {q}, T_q starts and accepts at q.
std::vector<std::pair<Nfa, Nfa>> decompose_omega(const BuchiAutomaton& a);

} // namespace jumpomega

#endif
