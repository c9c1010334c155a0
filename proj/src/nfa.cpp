#include "jumpomega/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace jumpomega {

namespace {

void sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void check_state(const Nfa& a, int q, const char* where) {
    if (q < 0 || q >= a.num_states())
        throw std::invalid_argument(std::string(where) + ": state out of range");
}

std::vector<std::string> fresh_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    return names;
}

} // namespace

void Nfa::add_transition(int from, int letter, int to) {
    check_state(*this, from, "add_transition");
    check_state(*this, to, "add_transition");
    if (letter < 0 || letter >= alphabet.size())
        throw std::invalid_argument("add_transition: letter out of range");
    sorted_insert(delta[static_cast<std::size_t>(from)][static_cast<std::size_t>(letter)], to);
}

bool Nfa::has_transition(int from, int letter, int to) const {
    return sorted_contains(delta[static_cast<std::size_t>(from)][static_cast<std::size_t>(letter)], to);
}

void Nfa::mark_initial(int q) {
    check_state(*this, q, "mark_initial");
    sorted_insert(initial, q);
}

void Nfa::mark_accepting(int q) {
    check_state(*this, q, "mark_accepting");
    sorted_insert(accepting, q);
}

bool Nfa::is_initial(int q) const { return sorted_contains(initial, q); }
bool Nfa::is_accepting(int q) const { return sorted_contains(accepting, q); }

bool Nfa::is_deterministic() const {
    if (initial.size() != 1) return false;
    for (const auto& row : delta)
        for (const auto& succs : row)
            if (succs.size() != 1) return false;
    return true;
}

Nfa Nfa::with_states(const Alphabet& sigma, int n) {
    Nfa a(sigma);
    for (auto& name : fresh_names(n)) a.add_state(std::move(name));
    return a;
}

// -- finite-word operations --------------------------------------------

bool nfa_accepts(const Nfa& a, const std::string& word) {
    std::vector<bool> cur(static_cast<std::size_t>(a.num_states()), false);
    for (int q : a.initial) cur[static_cast<std::size_t>(q)] = true;
    for (char c : word) {
        const int letter = a.alphabet.index(c);
        std::vector<bool> next(static_cast<std::size_t>(a.num_states()), false);
        for (int q = 0; q < a.num_states(); ++q) {
            if (!cur[static_cast<std::size_t>(q)]) continue;
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)])
                next[static_cast<std::size_t>(p)] = true;
        }
        cur = std::move(next);
    }
    for (int q : a.accepting)
        if (cur[static_cast<std::size_t>(q)]) return true;
    return false;
}

namespace {

// Copies states and transitions of `src` into `dst` (which already has
// `offset` states); returns the offset of the copy.
int append_copy(Nfa& dst, const Nfa& src) {
    const int offset = dst.num_states();
    for (int q = 0; q < src.num_states(); ++q) dst.add_state("q" + std::to_string(offset + q));
    for (int q = 0; q < src.num_states(); ++q)
        for (int l = 0; l < src.alphabet.size(); ++l)
            for (int p : src.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)])
                dst.add_transition(offset + q, l, offset + p);
    return offset;
}

bool accepts_epsilon(const Nfa& a) {
    for (int q : a.initial)
        if (a.is_accepting(q)) return true;
    return false;
}

} // namespace

Nfa nfa_union(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a.alphabet, b.alphabet, "nfa_union");
    Nfa r(a.alphabet);
    const int oa = append_copy(r, a);
    const int ob = append_copy(r, b);
    for (int q : a.initial) r.mark_initial(oa + q);
    for (int q : b.initial) r.mark_initial(ob + q);
    for (int q : a.accepting) r.mark_accepting(oa + q);
    for (int q : b.accepting) r.mark_accepting(ob + q);
    return r;
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a.alphabet, b.alphabet, "nfa_concat");
    Nfa r(a.alphabet);
    const int oa = append_copy(r, a);
    const int ob = append_copy(r, b);
    for (int q : a.initial) r.mark_initial(oa + q);
    // Entering b: every a-accepting state mimics b's initial states.
    for (int f : a.accepting)
        for (int i : b.initial)
            for (int l = 0; l < b.alphabet.size(); ++l)
                for (int p : b.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)])
                    r.add_transition(oa + f, l, ob + p);
    for (int q : b.accepting) r.mark_accepting(ob + q);
    if (accepts_epsilon(b))
        for (int q : a.accepting) r.mark_accepting(oa + q);
    if (accepts_epsilon(a))
        for (int q : b.initial) r.mark_initial(ob + q);
    return r;
}

Nfa nfa_star(const Nfa& a) {
    Nfa r(a.alphabet);
    const int oa = append_copy(r, a);
    const int s = r.add_state("q" + std::to_string(r.num_states()));
    r.mark_initial(s);
    r.mark_accepting(s);
    // s mimics a's initial states; a's accepting states loop back the same way.
    for (int i : a.initial)
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]) {
                r.add_transition(s, l, oa + p);
                for (int f : a.accepting) r.add_transition(oa + f, l, oa + p);
            }
    for (int q : a.accepting) r.mark_accepting(oa + q);
    return r;
}

Nfa nfa_product_intersection(const Nfa& a, const Nfa& b) {
    require_same_alphabet(a.alphabet, b.alphabet, "nfa_product_intersection");
    Nfa r(a.alphabet);
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> todo;
    auto state_of = [&](int qa, int qb) {
        auto [it, inserted] = index.try_emplace({qa, qb}, r.num_states());
        if (inserted) {
            r.add_state("q" + std::to_string(it->second));
            todo.emplace_back(qa, qb);
        }
        return it->second;
    };
    for (int qa : a.initial)
        for (int qb : b.initial) r.mark_initial(state_of(qa, qb));
    while (!todo.empty()) {
        auto [qa, qb] = todo.front();
        todo.pop_front();
        const int q = index.at({qa, qb});
        if (a.is_accepting(qa) && b.is_accepting(qb)) r.mark_accepting(q);
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int pa : a.delta[static_cast<std::size_t>(qa)][static_cast<std::size_t>(l)])
                for (int pb : b.delta[static_cast<std::size_t>(qb)][static_cast<std::size_t>(l)])
                    r.add_transition(q, l, state_of(pa, pb));
    }
    if (r.num_states() == 0) r.add_state("q0"); // keep at least one state
    return r;
}

Nfa nfa_restrict_alphabet(const Nfa& a, const std::vector<char>& gamma) {
    Nfa r = a;
    for (char c : gamma)
        if (!a.alphabet.contains(c))
            throw std::invalid_argument("nfa_restrict_alphabet: letter outside alphabet");
    for (int l = 0; l < a.alphabet.size(); ++l) {
        const bool keep = std::find(gamma.begin(), gamma.end(), a.alphabet.letter(l)) != gamma.end();
        if (keep) continue;
        for (int q = 0; q < r.num_states(); ++q)
            r.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)].clear();
    }
    return r;
}

namespace {

std::vector<bool> reachable_from(const Nfa& a, const std::vector<int>& seeds, bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
    std::deque<int> todo(seeds.begin(), seeds.end());
    for (int q : seeds) seen[static_cast<std::size_t>(q)] = true;
    // Reverse adjacency, built on demand for the backward sweep.
    std::vector<std::vector<int>> rev;
    if (!forward) {
        rev.assign(static_cast<std::size_t>(a.num_states()), {});
        for (int q = 0; q < a.num_states(); ++q)
            for (const auto& succs : a.delta[static_cast<std::size_t>(q)])
                for (int p : succs) rev[static_cast<std::size_t>(p)].push_back(q);
    }
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        if (forward) {
            for (const auto& succs : a.delta[static_cast<std::size_t>(q)])
                for (int p : succs)
                    if (!seen[static_cast<std::size_t>(p)]) {
                        seen[static_cast<std::size_t>(p)] = true;
                        todo.push_back(p);
                    }
        } else {
            for (int p : rev[static_cast<std::size_t>(q)])
                if (!seen[static_cast<std::size_t>(p)]) {
                    seen[static_cast<std::size_t>(p)] = true;
                    todo.push_back(p);
                }
        }
    }
    return seen;
}

} // namespace

bool nfa_is_empty(const Nfa& a) {
    const auto reach = reachable_from(a, a.initial, true);
    for (int q : a.accepting)
        if (reach[static_cast<std::size_t>(q)]) return false;
    return true;
}

Nfa nfa_trim(const Nfa& a) {
    const auto fwd = reachable_from(a, a.initial, true);
    const auto bwd = reachable_from(a, a.accepting, false);
    std::vector<int> remap(static_cast<std::size_t>(a.num_states()), -1);
    Nfa r(a.alphabet);
    for (int q = 0; q < a.num_states(); ++q)
        if (fwd[static_cast<std::size_t>(q)] && bwd[static_cast<std::size_t>(q)])
            remap[static_cast<std::size_t>(q)] = r.add_state("q" + std::to_string(r.num_states()));
    if (r.num_states() == 0) {
        r.add_state("q0"); // empty language, one junk state keeps invariants simple
        return r;
    }
    for (int q = 0; q < a.num_states(); ++q) {
        if (remap[static_cast<std::size_t>(q)] < 0) continue;
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)])
                if (remap[static_cast<std::size_t>(p)] >= 0)
                    r.add_transition(remap[static_cast<std::size_t>(q)], l, remap[static_cast<std::size_t>(p)]);
    }
    for (int q : a.initial)
        if (remap[static_cast<std::size_t>(q)] >= 0) r.mark_initial(remap[static_cast<std::size_t>(q)]);
    for (int q : a.accepting)
        if (remap[static_cast<std::size_t>(q)] >= 0) r.mark_accepting(remap[static_cast<std::size_t>(q)]);
    return r;
}

Nfa nfa_determinize(const Nfa& a, const Caps& caps) {
    Nfa r(a.alphabet);
    std::map<std::vector<int>, int> index;
    std::deque<std::vector<int>> todo;
    auto state_of = [&](const std::vector<int>& subset) {
        auto [it, inserted] = index.try_emplace(subset, r.num_states());
        if (inserted) {
            if (static_cast<std::uint64_t>(r.num_states()) + 1 > caps.automaton_states)
                throw ResourceError("nfa_determinize: state cap exceeded");
            r.add_state("q" + std::to_string(it->second));
            todo.push_back(subset);
        }
        return it->second;
    };
    const int start = state_of(a.initial);
    r.mark_initial(start);
    while (!todo.empty()) {
        const std::vector<int> subset = todo.front();
        todo.pop_front();
        const int q = index.at(subset);
        for (int s : subset)
            if (a.is_accepting(s)) {
                r.mark_accepting(q);
                break;
            }
        for (int l = 0; l < a.alphabet.size(); ++l) {
            std::set<int> succ;
            for (int s : subset)
                for (int p : a.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)])
                    succ.insert(p);
            r.add_transition(q, l, state_of(std::vector<int>(succ.begin(), succ.end())));
        }
    }
    return r;
}

// -- omega-word operations ---------------------------------------------

namespace {

// Product of the automaton with the position graph of u.v^omega.
// Node (q, i): i < |u| are prefix positions, i in [|u|, |u|+|v|) are
// cycle positions. Position advances by one, wrapping inside the cycle.
struct UpProduct {
    int states;
    std::size_t prefix_len;
    std::size_t period_len;

    std::size_t positions() const { return prefix_len + period_len; }
    std::size_t node(int q, std::size_t pos) const {
        return static_cast<std::size_t>(q) * positions() + pos;
    }
    std::size_t next_pos(std::size_t pos) const {
        ++pos;
        if (pos == positions()) pos = prefix_len;
        return pos;
    }
};

} // namespace

bool buchi_accepts_up(const BuchiAutomaton& a, const UpWord& w) {
    for (char c : w.prefix() + w.period())
        if (!a.alphabet.contains(c))
            throw std::invalid_argument("buchi_accepts_up: word letter outside alphabet");
    const UpProduct g{a.num_states(), w.prefix().size(), w.period().size()};
    const std::size_t n = static_cast<std::size_t>(g.states) * g.positions();

    std::vector<std::vector<std::size_t>> adj(n);
    for (int q = 0; q < g.states; ++q)
        for (std::size_t pos = 0; pos < g.positions(); ++pos) {
            const int letter = a.alphabet.index(w.at(pos));
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)])
                adj[g.node(q, pos)].push_back(g.node(p, g.next_pos(pos)));
        }

    std::vector<bool> reach(n, false);
    std::deque<std::size_t> todo;
    for (int q : a.initial) {
        const std::size_t s = g.node(q, 0);
        if (!reach[s]) {
            reach[s] = true;
            todo.push_back(s);
        }
    }
    while (!todo.empty()) {
        const std::size_t x = todo.front();
        todo.pop_front();
        for (std::size_t y : adj[x])
            if (!reach[y]) {
                reach[y] = true;
                todo.push_back(y);
            }
    }

    // Accepting lasso: a reachable cycle-part node with an accepting
    // automaton state that can return to itself in >= 1 step.
    for (int q : a.accepting)
        for (std::size_t pos = g.prefix_len; pos < g.positions(); ++pos) {
            const std::size_t x = g.node(q, pos);
            if (!reach[x]) continue;
            std::vector<bool> seen(n, false);
            std::deque<std::size_t> bfs(adj[x].begin(), adj[x].end());
            for (std::size_t y : adj[x]) seen[y] = true;
            bool back = false;
            while (!bfs.empty() && !back) {
                const std::size_t y = bfs.front();
                bfs.pop_front();
                if (y == x) {
                    back = true;
                    break;
                }
                for (std::size_t z : adj[y])
                    if (!seen[z]) {
                        seen[z] = true;
                        bfs.push_back(z);
                    }
            }
            if (back) return true;
        }
    return false;
}

namespace {

// Shortest letter path from one of `from` to `target`; the empty path is
// reported only when allow_empty.
std::optional<std::string> letter_path(const Nfa& a, const std::vector<int>& from, int target,
                                       bool allow_empty) {
    std::vector<int> pred_state(static_cast<std::size_t>(a.num_states()), -1);
    std::vector<char> pred_letter(static_cast<std::size_t>(a.num_states()), 0);
    std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
    std::deque<int> todo;
    for (int q : from) {
        if (allow_empty && q == target) return std::string();
        if (!seen[static_cast<std::size_t>(q)]) {
            seen[static_cast<std::size_t>(q)] = true;
            todo.push_back(q);
        }
    }
    while (!todo.empty()) {
        const int q = todo.front();
        todo.pop_front();
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                if (seen[static_cast<std::size_t>(p)]) continue;
                seen[static_cast<std::size_t>(p)] = true;
                pred_state[static_cast<std::size_t>(p)] = q;
                pred_letter[static_cast<std::size_t>(p)] = a.alphabet.letter(l);
                if (p == target) {
                    std::string path;
                    for (int s = p; pred_state[static_cast<std::size_t>(s)] >= 0;
                         s = pred_state[static_cast<std::size_t>(s)])
                        path.push_back(pred_letter[static_cast<std::size_t>(s)]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                todo.push_back(p);
            }
    }
    return std::nullopt;
}

} // namespace

std::optional<UpWord> buchi_emptiness(const BuchiAutomaton& a) {
    const auto reach = reachable_from(a, a.initial, true);
    for (int q : a.accepting) {
        if (!reach[static_cast<std::size_t>(q)]) continue;
        // cycle q -> q of length >= 1, prefixed by a path from an initial state
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                auto tail = letter_path(a, {p}, q, true);
                if (!tail) continue;
                auto head = letter_path(a, a.initial, q, true);
                if (!head) continue;
                std::string cycle;
                cycle.push_back(a.alphabet.letter(l));
                cycle += *tail;
                return UpWord(*head, cycle);
            }
    }
    return std::nullopt;
}

std::vector<std::pair<Nfa, Nfa>> decompose_omega(const BuchiAutomaton& a) {
    std::vector<std::pair<Nfa, Nfa>> pairs;
    for (int q : a.accepting) {
        Nfa s = a;
        s.accepting = {q};
        Nfa t = a;
        t.initial = {q};
        t.accepting = {q};
        pairs.emplace_back(std::move(s), std::move(t));
    }
    return pairs;
}

} // namespace jumpomega
