#include "jumpomega/windows.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace jumpomega {

namespace {

// Small dense Parikh buffer for windows (entries < k, so int is plenty).
using Buffer = std::vector<int>;

std::string buffer_name(const std::string& state, const Buffer& buf) {
    std::string out = state + "#";
    for (std::size_t i = 0; i < buf.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(buf[i]);
    }
    return out;
}

// States reachable from q on some word with Parikh image `target`,
// split by whether the run meets alpha after at least one letter.
struct WindowReach {
    std::set<int> plain;
    std::set<int> via_accepting;
};

WindowReach window_reach(const BuchiAutomaton& a, int q, const Buffer& target, const Caps& caps) {
    // BFS over (state, accepted-flag, consumed counts).
    std::map<std::pair<std::pair<int, bool>, Buffer>, bool> seen;
    std::deque<std::pair<std::pair<int, bool>, Buffer>> todo;
    const Buffer zero(target.size(), 0);
    WindowReach out;
    std::uint64_t nodes = 0;
    auto offer = [&](int state, bool flag, const Buffer& consumed) {
        auto key = std::make_pair(std::make_pair(state, flag), consumed);
        if (seen.emplace(key, true).second) {
            if (++nodes > caps.search_nodes)
                throw ResourceError("kwindow_construct: window exploration cap exceeded");
            todo.push_back(key);
        }
    };
    offer(q, false, zero);
    while (!todo.empty()) {
        auto [state_flag, consumed] = todo.front();
        todo.pop_front();
        auto [state, flag] = state_flag;
        if (consumed == target) {
            (flag ? out.via_accepting : out.plain).insert(state);
            continue;
        }
        for (std::size_t l = 0; l < consumed.size(); ++l) {
            if (consumed[l] >= target[l]) continue;
            Buffer next = consumed;
            ++next[l];
            for (int p : a.delta[static_cast<std::size_t>(state)][l])
                offer(p, flag || a.is_accepting(p), next);
        }
    }
    return out;
}

} // namespace

BuchiAutomaton kwindow_construct(const BuchiAutomaton& a, int k, const Caps& caps) {
    if (k < 1) throw std::invalid_argument("kwindow_construct: k must be >= 1");
    const int dim = a.alphabet.size();
    BuchiAutomaton b(a.alphabet);

    // Buffered states (q, v) with |v| < k, plus the accepting copies q#acc.
    std::map<std::pair<int, Buffer>, int> buffered;
    std::map<int, int> accepting_copy;
    std::deque<std::pair<int, Buffer>> todo; // buffered states to expand

    auto buffered_state = [&](int q, const Buffer& buf) {
        auto [it, inserted] = buffered.try_emplace({q, buf}, -1);
        if (inserted) {
            if (static_cast<std::uint64_t>(b.num_states()) + 1 > caps.automaton_states)
                throw ResourceError("kwindow_construct: state cap exceeded");
            it->second = b.add_state(buffer_name(a.state_names[static_cast<std::size_t>(q)], buf));
            todo.emplace_back(q, buf);
        }
        return it->second;
    };
    auto accepting_state = [&](int q) {
        auto [it, inserted] = accepting_copy.try_emplace(q, -1);
        if (inserted) {
            it->second = b.add_state(a.state_names[static_cast<std::size_t>(q)] + "#acc");
            b.mark_accepting(it->second);
        }
        return it->second;
    };

    const Buffer zero(static_cast<std::size_t>(dim), 0);
    for (int q : a.initial) b.mark_initial(buffered_state(q, zero));

    // Window-completion cache per (state, full window vector).
    std::map<std::pair<int, Buffer>, WindowReach> completions;

    // Each buffered state's outgoing edges are written exactly once, when
    // it is popped. Every accepting copy needs its q's zero-buffer state,
    // which may itself open new work, hence the outer fixpoint.
    while (true) {
        while (!todo.empty()) {
            auto [q, buf] = todo.front();
            todo.pop_front();
            const int from = buffered.at({q, buf});
            int filled = 0;
            for (int c : buf) filled += c;
            for (int l = 0; l < dim; ++l) {
                Buffer next = buf;
                ++next[static_cast<std::size_t>(l)];
                if (filled + 1 < k) {
                    b.add_transition(from, l, buffered_state(q, next));
                    continue;
                }
                auto it = completions.find({q, next});
                if (it == completions.end())
                    it = completions
                             .emplace(std::make_pair(q, next), window_reach(a, q, next, caps))
                             .first;
                for (int p : it->second.plain) b.add_transition(from, l, buffered_state(p, zero));
                for (int p : it->second.via_accepting)
                    b.add_transition(from, l, accepting_state(p));
            }
        }
        bool grew = false;
        for (const auto& [q, copy] : accepting_copy)
            if (!buffered.count({q, zero})) {
                buffered_state(q, zero);
                grew = true;
            }
        if (!grew) break;
    }
    // The accepting copy behaves like the zero-buffer state.
    for (const auto& [q, copy] : accepting_copy) {
        const int zero_state = buffered.at({q, zero});
        for (int l = 0; l < dim; ++l)
            for (int succ : b.delta[static_cast<std::size_t>(zero_state)][static_cast<std::size_t>(l)])
                b.add_transition(copy, l, succ);
    }
    return b;
}

bool kwindow_member_up(const BuchiAutomaton& a, int k, const UpWord& w, const Caps& caps) {
    for (char c : w.prefix() + w.period())
        if (!a.alphabet.contains(c))
            throw std::invalid_argument("kwindow_member_up: word letter outside alphabet");
    return buchi_accepts_up(kwindow_construct(a, k, caps), w);
}

// -- existential windows ----------------------------------------------------

namespace {

std::string representative_word(const FinVector& v, const Alphabet& sigma) {
    std::string out;
    for (int i = 0; i < sigma.size(); ++i)
        for (Int k = 0; k < v[static_cast<std::size_t>(i)]; ++k) out.push_back(sigma.letter(i));
    return out;
}

// Appends to `b` the piece for one canonical component: an NFA for
// w_b (w_p...)* whose accepting states feed the degeneralized automaton
// for "every masked letter occurs infinitely often".
void append_component(BuchiAutomaton& b, const LinearSet& comp, const Mask& mask,
                      const Alphabet& sigma) {
    const int dim = sigma.size();
    std::vector<std::string> period_words;
    for (const auto& p : comp.periods) {
        bool is_mask_unit = false;
        for (int i : mask.infinite_letters())
            if (p == unit_vector(dim, i)) is_mask_unit = true;
        if (!is_mask_unit) period_words.push_back(representative_word(p, sigma));
    }
    const std::string base_word = representative_word(comp.base, sigma);

    int cursor = b.add_state("n" + std::to_string(b.num_states()));
    b.mark_initial(cursor);
    for (char c : base_word) {
        const int next = b.add_state("n" + std::to_string(b.num_states()));
        b.add_transition(cursor, c, next);
        cursor = next;
    }
    const int hub = cursor;
    for (const auto& word : period_words) {
        int at = hub;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            const int next = b.add_state("n" + std::to_string(b.num_states()));
            b.add_transition(at, word[i], next);
            at = next;
        }
        b.add_transition(at, word.back(), hub);
    }

    // Counter automaton for the masked letters, in alphabet order: state i
    // waits for the i-th letter; completing a full round enters the
    // dedicated accepting state, which then behaves like state 0. A word
    // over the masked letters is accepted iff every one occurs infinitely
    // often.
    const std::vector<int> infinite = mask.infinite_letters();
    const int k = static_cast<int>(infinite.size());
    std::vector<int> counter;
    for (int i = 0; i < k; ++i)
        counter.push_back(b.add_state("w" + std::to_string(b.num_states())));
    const int round_done = b.add_state("w" + std::to_string(b.num_states()));
    b.mark_accepting(round_done);
    auto advance = [&](int i) { return (i + 1 == k) ? round_done : counter[static_cast<std::size_t>(i + 1)]; };
    for (int i = 0; i < k; ++i)
        for (int l : infinite) {
            const int target = (l == infinite[static_cast<std::size_t>(i)])
                                   ? advance(i)
                                   : counter[static_cast<std::size_t>(i)];
            b.add_transition(counter[static_cast<std::size_t>(i)], l, target);
        }
    for (int l : infinite) {
        const int target = (l == infinite[0]) ? advance(0) : counter[0];
        b.add_transition(round_done, l, target);
    }
    // The hub (and only it) enters the counter, copying state 0's edges.
    for (int l : infinite)
        for (int target : b.delta[static_cast<std::size_t>(counter[0])][static_cast<std::size_t>(l)])
            b.add_transition(hub, l, target);
}

} // namespace

BuchiAutomaton ewindow_construct(const BuchiAutomaton& a, const Caps& caps) {
    const MaskedSemilinearSet m = canonicalize(jumping_parikh(a, caps));
    BuchiAutomaton b(a.alphabet);
    for (const auto& [mask, set] : m.parts())
        for (const auto& comp : set.components()) append_component(b, comp, mask, a.alphabet);
    if (b.num_states() == 0) {
        const int q = b.add_state("q0");
        b.mark_initial(q);
    }
    return b;
}

EwindowResult ewindow_member_bounded(const BuchiAutomaton& a, const UpWord& w, int kmax,
                                     const Caps& caps) {
    if (kmax < 1) throw std::invalid_argument("ewindow_member_bounded: kmax must be >= 1");
    for (int k = 1; k <= kmax; ++k)
        if (kwindow_member_up(a, k, w, caps)) return {k, kmax};
    return {std::nullopt, kmax};
}

} // namespace jumpomega
