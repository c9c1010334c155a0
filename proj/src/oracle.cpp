#include "jumpomega/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace jumpomega::oracle {

namespace {

void enum_words(const Nfa& n, std::vector<bool>& states, std::string& word, int maxlen,
                std::set<FinVector>& out) {
    bool accepting = false;
    for (int q : n.accepting)
        if (states[static_cast<std::size_t>(q)]) {
            accepting = true;
            break;
        }
    if (accepting) out.insert(psi_word(word, n.alphabet));
    if (static_cast<int>(word.size()) == maxlen) return;
    for (int l = 0; l < n.alphabet.size(); ++l) {
        std::vector<bool> next(states.size(), false);
        bool any = false;
        for (int q = 0; q < n.num_states(); ++q) {
            if (!states[static_cast<std::size_t>(q)]) continue;
            for (int p : n.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                next[static_cast<std::size_t>(p)] = true;
                any = true;
            }
        }
        if (!any) continue;
        word.push_back(n.alphabet.letter(l));
        std::swap(states, next);
        enum_words(n, states, word, maxlen, out);
        std::swap(states, next);
        word.pop_back();
    }
}

} // namespace

std::set<FinVector> enum_parikh_language(const Nfa& n, int maxlen) {
    if (maxlen < 0 || maxlen > 12)
        throw std::invalid_argument("enum_parikh_language: maxlen must be in 0..12");
    std::set<FinVector> out;
    std::vector<bool> states(static_cast<std::size_t>(n.num_states()), false);
    for (int q : n.initial) states[static_cast<std::size_t>(q)] = true;
    std::string word;
    enum_words(n, states, word, maxlen, out);
    return out;
}

namespace {

// Distinct permutations of a window's letters.
std::vector<std::string> window_permutations(std::string window) {
    std::sort(window.begin(), window.end());
    std::vector<std::string> out;
    do out.push_back(window);
    while (std::next_permutation(window.begin(), window.end()));
    return out;
}

} // namespace

bool brute_window_member(const BuchiAutomaton& a, int k, const UpWord& w, int unroll,
                         const Caps& caps) {
    if (k < 1) throw std::invalid_argument("brute_window_member: k must be >= 1");
    const std::size_t period = w.period().size();
    const long long cycle_span = std::lcm<long long>(k, static_cast<long long>(period));
    if (static_cast<long long>(unroll) < static_cast<long long>(a.num_states()) * cycle_span)
        throw std::invalid_argument("brute_window_member: unroll below |Q| * lcm(k, |v|)");
    if (static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(unroll) > caps.search_nodes)
        throw ResourceError("brute_window_member: k * unroll cap exceeded");

    // Window index space: the first windows overlap the prefix; from the
    // first fully periodic window on, contents repeat every T windows.
    const std::size_t prefix_len = w.prefix().size();
    const std::size_t first_cyclic = (prefix_len + static_cast<std::size_t>(k) - 1) /
                                     static_cast<std::size_t>(k);
    const std::size_t cycle_windows = static_cast<std::size_t>(cycle_span) / static_cast<std::size_t>(k);
    const std::size_t window_count = first_cyclic + cycle_windows;

    auto window_content = [&](std::size_t index) {
        std::string out;
        for (int i = 0; i < k; ++i)
            out.push_back(w.at(index * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)));
        return out;
    };
    auto next_window = [&](std::size_t index) {
        ++index;
        if (index == window_count) index = first_cyclic;
        return index;
    };

    // Node (window index, state); edge flagged when the chosen permutation
    // passes through alpha (endpoint included, start excluded).
    const std::size_t n = window_count * static_cast<std::size_t>(a.num_states());
    auto node = [&](std::size_t index, int q) {
        return index * static_cast<std::size_t>(a.num_states()) + static_cast<std::size_t>(q);
    };
    struct Edge {
        std::size_t to;
        bool flagged;
    };
    std::vector<std::vector<Edge>> adj(n);
    for (std::size_t index = 0; index < window_count; ++index) {
        const auto perms = window_permutations(window_content(index));
        for (int q = 0; q < a.num_states(); ++q) {
            std::set<std::pair<int, bool>> results;
            for (const auto& perm : perms) {
                // all runs of `a` from q over perm
                std::set<std::pair<int, bool>> cur = {{q, false}};
                for (char c : perm) {
                    std::set<std::pair<int, bool>> next;
                    const int letter = a.alphabet.index(c);
                    for (const auto& [state, flag] : cur)
                        for (int p : a.delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter)])
                            next.emplace(p, flag || a.is_accepting(p));
                    cur = std::move(next);
                }
                results.insert(cur.begin(), cur.end());
            }
            for (const auto& [p, flag] : results)
                adj[node(index, q)].push_back({node(next_window(index), p), flag});
        }
    }

    // Reachability from the initial nodes.
    std::vector<bool> reach(n, false);
    std::deque<std::size_t> todo;
    for (int q : a.initial) {
        const std::size_t s = node(0, q);
        if (!reach[s]) {
            reach[s] = true;
            todo.push_back(s);
        }
    }
    while (!todo.empty()) {
        const std::size_t x = todo.front();
        todo.pop_front();
        for (const Edge& e : adj[x])
            if (!reach[e.to]) {
                reach[e.to] = true;
                todo.push_back(e.to);
            }
    }

    // Accepting lasso: a reachable flagged edge on a cycle.
    for (std::size_t x = 0; x < n; ++x) {
        if (!reach[x]) continue;
        for (const Edge& e : adj[x]) {
            if (!e.flagged) continue;
            // path e.to -> x closes the cycle
            std::vector<bool> seen(n, false);
            std::deque<std::size_t> bfs = {e.to};
            seen[e.to] = true;
            bool closes = e.to == x;
            while (!bfs.empty() && !closes) {
                const std::size_t y = bfs.front();
                bfs.pop_front();
                if (y == x) {
                    closes = true;
                    break;
                }
                for (const Edge& f : adj[y])
                    if (!seen[f.to]) {
                        seen[f.to] = true;
                        bfs.push_back(f.to);
                    }
            }
            if (closes) return true;
        }
    }
    return false;
}

bool grid_check_semilinear(const SemilinearSet& s,
                           const std::function<bool(const FinVector&)>& pred, int box) {
    if (box < 0 || box > 12) throw std::invalid_argument("grid_check_semilinear: box must be in 0..12");
    if (s.dim() > 3) throw std::invalid_argument("grid_check_semilinear: dimension must be <= 3");
    FinVector point = zero_vector(s.dim());
    std::function<bool(int)> walk = [&](int pos) {
        if (pos == s.dim()) return sl_membership(point, s) == pred(point);
        for (Int v = 0; v <= box; ++v) {
            point[static_cast<std::size_t>(pos)] = v;
            if (!walk(pos + 1)) return false;
        }
        return true;
    };
    return walk(0);
}

} // namespace jumpomega::oracle
