#include "jumpomega/jumping.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace jumpomega {

namespace {

// Two-state automaton for "the word contains sigma".
Nfa contains_letter(const Alphabet& sigma, int letter) {
    Nfa a = Nfa::with_states(sigma, 2);
    a.mark_initial(0);
    a.mark_accepting(1);
    for (int l = 0; l < sigma.size(); ++l) {
        a.add_transition(0, l, 0);
        a.add_transition(1, l, 1);
    }
    a.add_transition(0, letter, 1);
    return a;
}

} // namespace

std::set<Mask> compute_mask_set(const Nfa& t) {
    const Alphabet& sigma = t.alphabet;
    std::set<Mask> out;
    for (const Mask& mask : all_masks(sigma.size())) {
        std::vector<char> gamma;
        for (int i : mask.infinite_letters()) gamma.push_back(sigma.letter(i));
        const Nfa restricted = nfa_restrict_alphabet(t, gamma);
        bool ok = true;
        for (int i : mask.infinite_letters()) {
            if (nfa_is_empty(nfa_product_intersection(restricted, contains_letter(sigma, i)))) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(mask);
    }
    return out;
}

MaskedSemilinearSet jumping_parikh(const BuchiAutomaton& a, const Caps& caps) {
    MaskedSemilinearSet out(a.alphabet);
    std::map<Mask, std::vector<LinearSet>> parts;
    for (const auto& [s, t] : decompose_omega(a)) {
        const Nfa t_trim = nfa_trim(t);
        const std::set<Mask> masks = compute_mask_set(t_trim);
        if (masks.empty()) continue;
        const Nfa piece = nfa_trim(nfa_concat(s, nfa_star(t)));
        const SemilinearSet image = parikh_of_nfa(piece, caps);
        for (const Mask& m : masks)
            for (const auto& comp : image.components()) parts[m].push_back(comp);
    }
    for (auto& [mask, comps] : parts)
        out.set_part(mask, SemilinearSet(a.alphabet.size(), std::move(comps)));
    return canonicalize(out);
}

// -- masked set to deterministic automaton --------------------------------

namespace {

// a^{v_a} b^{v_b} ... with letters in alphabet order.
std::string representative_word(const FinVector& v, const Alphabet& sigma) {
    std::string out;
    for (int i = 0; i < sigma.size(); ++i) {
        const Int& count = v[static_cast<std::size_t>(i)];
        for (Int k = 0; k < count; ++k) out.push_back(sigma.letter(i));
    }
    return out;
}

// Complete DFA whose Buchi language is w_b (w_p1 + ... + w_pn)* w_E^omega
// for the canonical component Lin(base, periods + E_m) under `mask`.
Nfa component_dba(const LinearSet& comp, const Mask& mask, const Alphabet& sigma,
                  const Caps& caps) {
    const int dim = sigma.size();
    // Separate the mask's unit periods from the finite-letter periods.
    std::vector<std::string> period_words;
    for (const auto& p : comp.periods) {
        bool is_mask_unit = false;
        for (int i : mask.infinite_letters())
            if (p == unit_vector(dim, i)) is_mask_unit = true;
        if (!is_mask_unit) period_words.push_back(representative_word(p, sigma));
    }
    const std::string base_word = representative_word(comp.base, sigma);

    // NFA for w_b (w_p1 + ... + w_pn)*.
    Nfa nfa(sigma);
    int cursor = nfa.add_state("n0");
    nfa.mark_initial(cursor);
    for (char c : base_word) {
        const int next = nfa.add_state("n" + std::to_string(nfa.num_states()));
        nfa.add_transition(cursor, c, next);
        cursor = next;
    }
    const int hub = cursor;
    nfa.mark_accepting(hub);
    for (const auto& word : period_words) {
        int at = hub;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const int next = nfa.add_state("n" + std::to_string(nfa.num_states()));
            nfa.add_transition(at, word[i], next);
            at = next;
        }
        nfa.add_transition(at, word.back(), hub);
    }

    Nfa dfa = nfa_determinize(nfa, caps);

    // Attach the w_E cycle on the mask letters, in alphabet order. The
    // canonical form guarantees the first mask letter is unused so far,
    // so redirecting it keeps the automaton deterministic.
    const std::vector<int> infinite = mask.infinite_letters();
    const std::string cycle_word = [&] {
        std::string w;
        for (int i : infinite) w.push_back(sigma.letter(i));
        return w;
    }();
    const int k = static_cast<int>(cycle_word.size());
    std::vector<int> cycle_states;
    for (int i = 0; i < k; ++i)
        cycle_states.push_back(dfa.add_state("c" + std::to_string(i)));
    // Complete the cycle states: unexpected letters fall into a sink.
    const int sink = [&] {
        // reuse the determinization sink if one exists: state with no
        // acceptance and all-self loops is not guaranteed, so add our own
        int s = dfa.add_state("sink");
        for (int l = 0; l < dim; ++l) dfa.add_transition(s, l, s);
        return s;
    }();
    for (int i = 0; i < k; ++i) {
        const char expected = cycle_word[static_cast<std::size_t>((i + 1) % k)];
        for (int l = 0; l < dim; ++l) {
            const int target = (sigma.letter(l) == expected) ? cycle_states[static_cast<std::size_t>((i + 1) % k)] : sink;
            dfa.add_transition(cycle_states[static_cast<std::size_t>(i)], l, target);
        }
    }
    // Redirect sigma_1-transitions of accepting subsets into the cycle.
    const int first_letter = sigma.index(cycle_word[0]);
    for (int q : dfa.accepting)
        dfa.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(first_letter)] = {
            cycle_states[0]};
    dfa.accepting = cycle_states;
    std::sort(dfa.accepting.begin(), dfa.accepting.end());
    return dfa;
}

// Union product of complete deterministic automata: accepting wherever
// some factor accepts. Reachable tuples only.
Nfa union_product(const std::vector<Nfa>& pieces, const Alphabet& sigma, const Caps& caps) {
    Nfa out(sigma);
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> todo;
    auto state_of = [&](const std::vector<int>& tuple) {
        auto [it, inserted] = index.try_emplace(tuple, out.num_states());
        if (inserted) {
            if (static_cast<std::uint64_t>(out.num_states()) + 1 > caps.automaton_states)
                throw ResourceError("masked_to_dba: product state cap exceeded");
            out.add_state("q" + std::to_string(it->second));
            todo.push_back(tuple);
        }
        return it->second;
    };
    std::vector<int> start;
    for (const auto& piece : pieces) start.push_back(piece.initial.at(0));
    out.mark_initial(state_of(start));
    while (!todo.empty()) {
        const std::vector<int> tuple = todo.front();
        todo.pop_front();
        const int q = index.at(tuple);
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].is_accepting(tuple[i])) {
                out.mark_accepting(q);
                break;
            }
        for (int l = 0; l < sigma.size(); ++l) {
            std::vector<int> succ;
            succ.reserve(pieces.size());
            for (std::size_t i = 0; i < pieces.size(); ++i)
                succ.push_back(
                    pieces[i].delta[static_cast<std::size_t>(tuple[i])][static_cast<std::size_t>(l)].at(0));
            out.add_transition(q, l, state_of(succ));
        }
    }
    return out;
}

BuchiAutomaton rejecting_dba(const Alphabet& sigma) {
    BuchiAutomaton d(sigma);
    const int q = d.add_state("q0");
    d.mark_initial(q);
    for (int l = 0; l < sigma.size(); ++l) d.add_transition(q, l, q);
    return d;
}

} // namespace

BuchiAutomaton masked_to_dba(const MaskedSemilinearSet& m, const Caps& caps) {
    const MaskedSemilinearSet canon = canonicalize(m);
    const Alphabet& sigma = canon.alphabet();
    std::vector<Nfa> pieces;
    for (const auto& [mask, set] : canon.parts())
        for (const auto& comp : set.components())
            pieces.push_back(component_dba(comp, mask, sigma, caps));
    if (pieces.empty()) return rejecting_dba(sigma);
    return BuchiAutomaton(union_product(pieces, sigma, caps));
}

bool jumping_member_up(const BuchiAutomaton& a, const UpWord& w, const Caps& caps) {
    for (char c : w.prefix() + w.period())
        if (!a.alphabet.contains(c))
            throw std::invalid_argument("jumping_member_up: word letter outside alphabet");
    return masked_membership(psi_upword(w, a.alphabet), jumping_parikh(a, caps));
}

BuchiAutomaton universal_automaton(const Alphabet& sigma) {
    BuchiAutomaton u(sigma);
    const int q = u.add_state("q0");
    u.mark_initial(q);
    u.mark_accepting(q);
    for (int l = 0; l < sigma.size(); ++l) u.add_transition(q, l, q);
    return u;
}

BuchiAutomaton jumping_closure(ClosureKind kind, const BuchiAutomaton& a,
                               const BuchiAutomaton* b, const Caps& caps) {
    switch (kind) {
        case ClosureKind::Union: {
            if (b == nullptr) throw std::invalid_argument("jumping_closure: union needs two operands");
            return BuchiAutomaton(nfa_union(a, *b));
        }
        case ClosureKind::Intersection: {
            if (b == nullptr)
                throw std::invalid_argument("jumping_closure: intersection needs two operands");
            require_same_alphabet(a.alphabet, b->alphabet, "jumping_closure");
            return masked_to_dba(
                masked_intersect(jumping_parikh(a, caps), jumping_parikh(*b, caps), caps), caps);
        }
        case ClosureKind::Complement:
            return masked_to_dba(masked_complement(jumping_parikh(a, caps), caps), caps);
        case ClosureKind::Determinize:
            return masked_to_dba(jumping_parikh(a, caps), caps);
    }
    throw std::invalid_argument("jumping_closure: unknown kind");
}

bool jumping_decide(DecisionKind kind, const BuchiAutomaton& a, const BuchiAutomaton* b,
                    const Caps& caps) {
    switch (kind) {
        case DecisionKind::Empty:
            return !buchi_emptiness(a).has_value();
        case DecisionKind::Containment: {
            if (b == nullptr)
                throw std::invalid_argument("jumping_decide: containment needs two operands");
            require_same_alphabet(a.alphabet, b->alphabet, "jumping_decide");
            return masked_inclusion(jumping_parikh(a, caps), jumping_parikh(*b, caps), caps);
        }
        case DecisionKind::Equivalence: {
            if (b == nullptr)
                throw std::invalid_argument("jumping_decide: equivalence needs two operands");
            require_same_alphabet(a.alphabet, b->alphabet, "jumping_decide");
            const MaskedSemilinearSet ma = jumping_parikh(a, caps);
            const MaskedSemilinearSet mb = jumping_parikh(*b, caps);
            return masked_inclusion(ma, mb, caps) && masked_inclusion(mb, ma, caps);
        }
        case DecisionKind::Universality:
            return masked_inclusion(jumping_parikh(universal_automaton(a.alphabet), caps),
                                    jumping_parikh(a, caps), caps);
    }
    throw std::invalid_argument("jumping_decide: unknown kind");
}

} // namespace jumpomega
