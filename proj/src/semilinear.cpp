#include "jumpomega/semilinear.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace jumpomega {

namespace {

Int lcm_int(const Int& a, const Int& b) {
    Int x = a < 0 ? -a : a, y = b < 0 ? -b : b;
    if (x == 0 || y == 0) return 0;
    Int g = boost::multiprecision::gcd(x, y);
    return (x / g) * y;
}

int compare_vec(const FinVector& a, const FinVector& b) {
    if (a != b) return a < b ? -1 : 1;
    return 0;
}

int compare_component(const LinearSet& a, const LinearSet& b) {
    if (int c = compare_vec(a.base, b.base); c != 0) return c;
    if (a.periods != b.periods) return a.periods < b.periods ? -1 : 1;
    return 0;
}

} // namespace

SemilinearSet::SemilinearSet(int dim, std::vector<LinearSet> components) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("semilinear: dimension must be >= 1");
    for (auto& comp : components) {
        if (static_cast<int>(comp.base.size()) != dim)
            throw std::invalid_argument("semilinear: base dimension mismatch");
        std::vector<FinVector> periods;
        for (auto& p : comp.periods) {
            if (static_cast<int>(p.size()) != dim)
                throw std::invalid_argument("semilinear: period dimension mismatch");
            if (!vector_is_zero(p)) periods.push_back(std::move(p));
        }
        std::sort(periods.begin(), periods.end());
        periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
        comp.periods = std::move(periods);
    }
    std::sort(components.begin(), components.end(),
              [](const LinearSet& a, const LinearSet& b) { return compare_component(a, b) < 0; });
    components.erase(std::unique(components.begin(), components.end(),
                                 [](const LinearSet& a, const LinearSet& b) {
                                     return compare_component(a, b) == 0;
                                 }),
                     components.end());
    components_ = std::move(components);
}

SemilinearSet SemilinearSet::full(int dim) {
    LinearSet lin;
    lin.base = zero_vector(dim);
    for (int i = 0; i < dim; ++i) lin.periods.push_back(unit_vector(dim, i));
    return SemilinearSet(dim, {std::move(lin)});
}

bool SemilinearSet::operator==(const SemilinearSet& o) const {
    if (dim_ != o.dim_ || components_.size() != o.components_.size()) return false;
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (compare_component(components_[i], o.components_[i]) != 0) return false;
    return true;
}

// -- vector helpers ----------------------------------------------------------

FinVector zero_vector(int dim) { return FinVector(static_cast<std::size_t>(dim), Int(0)); }

FinVector unit_vector(int dim, int i) {
    FinVector v = zero_vector(dim);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

bool vector_is_zero(const FinVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

FinVector vector_add(const FinVector& a, const FinVector& b) {
    FinVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

namespace {

bool monoid_search(const FinVector& v, const std::vector<FinVector>& gens, std::size_t from) {
    if (vector_is_zero(v)) return true;
    if (from >= gens.size()) return false;
    const FinVector& g = gens[from];
    // Largest usable multiplicity of g.
    Int max_count = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (g[i] == 0) continue;
        Int bound = v[i] / g[i];
        if (max_count < 0 || bound < max_count) max_count = bound;
    }
    if (max_count < 0) return false; // zero generator, excluded on construction
    for (Int k = 0; k <= max_count; ++k) {
        FinVector rest = v;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            rest[i] -= g[i] * k;
            if (rest[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok && monoid_search(rest, gens, from + 1)) return true;
    }
    return false;
}

} // namespace

bool in_monoid(const FinVector& v, const std::vector<FinVector>& generators) {
    for (const auto& x : v)
        if (x < 0) return false;
    return monoid_search(v, generators, 0);
}

FinVector psi_word(const std::string& word, const Alphabet& sigma) {
    FinVector v = zero_vector(sigma.size());
    for (char c : word) v[static_cast<std::size_t>(sigma.index(c))] += 1;
    return v;
}

// -- membership ----------------------------------------------------------------

bool sl_membership(const FinVector& v, const SemilinearSet& s) {
    if (static_cast<int>(v.size()) != s.dim())
        throw std::invalid_argument("sl_membership: dimension mismatch");
    for (const auto& comp : s.components()) {
        FinVector diff = v;
        bool ok = true;
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] -= comp.base[i];
            if (diff[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok && in_monoid(diff, comp.periods)) return true;
    }
    return false;
}

// -- intersection ----------------------------------------------------------------

namespace {

FinVector combine(const FinVector& base, const std::vector<FinVector>& periods,
                  const FinVector& multipliers, std::size_t offset) {
    FinVector out = base;
    for (std::size_t j = 0; j < periods.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += periods[j][i] * multipliers[offset + j];
    return out;
}

void intersect_pair(const LinearSet& a, const LinearSet& b, int dim,
                    std::vector<LinearSet>& out, const Caps& caps) {
    const std::size_t na = a.periods.size(), nb = b.periods.size();
    const int vars = static_cast<int>(na + nb);
    if (vars == 0) {
        if (a.base == b.base) out.push_back({a.base, {}});
        return;
    }
    // a.base + A lambda = b.base + B mu, solved over (lambda, mu).
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    for (int i = 0; i < dim; ++i) {
        std::vector<Int> row(static_cast<std::size_t>(vars), Int(0));
        for (std::size_t j = 0; j < na; ++j) row[j] = a.periods[j][static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < nb; ++j)
            row[na + j] = -b.periods[j][static_cast<std::size_t>(i)];
        rows.push_back(std::move(row));
        rhs.push_back(b.base[static_cast<std::size_t>(i)] - a.base[static_cast<std::size_t>(i)]);
    }
    const NatSolutions sols = solve_linear_eq_nat(rows, rhs, vars, caps);
    std::vector<FinVector> periods;
    for (const auto& h : sols.periods) {
        FinVector p = combine(zero_vector(dim), a.periods, h, 0);
        if (!vector_is_zero(p)) periods.push_back(std::move(p));
    }
    for (const auto& l : sols.bases)
        out.push_back({combine(a.base, a.periods, l, 0), periods});
}

} // namespace

SemilinearSet sl_intersect(const SemilinearSet& s, const SemilinearSet& t, const Caps& caps) {
    if (s.dim() != t.dim()) throw std::invalid_argument("sl_intersect: dimension mismatch");
    std::vector<LinearSet> out;
    for (const auto& a : s.components())
        for (const auto& b : t.components()) intersect_pair(a, b, s.dim(), out, caps);
    return SemilinearSet(s.dim(), std::move(out));
}

// -- formula conversions ------------------------------------------------------------

FormulaRef semilinear_to_formula(const SemilinearSet& s) {
    const int d = s.dim();
    std::vector<FormulaRef> disjuncts;
    for (const auto& comp : s.components()) {
        std::vector<FormulaRef> eqs;
        for (int i = 0; i < d; ++i) {
            Term t = Term::of_var(i) - Term::of_const(comp.base[static_cast<std::size_t>(i)]);
            for (std::size_t j = 0; j < comp.periods.size(); ++j)
                t = t - Term::of_var(d + static_cast<Var>(j)) *
                            comp.periods[j][static_cast<std::size_t>(i)];
            eqs.push_back(f_eq(std::move(t)));
        }
        FormulaRef body = f_and(std::move(eqs));
        for (int j = static_cast<int>(comp.periods.size()) - 1; j >= 0; --j)
            body = f_exists(d + j, std::move(body));
        disjuncts.push_back(std::move(body));
    }
    return disjuncts.empty() ? f_false() : f_or(std::move(disjuncts));
}

SemilinearSet formula_to_semilinear(const FormulaRef& f, int dim, const Caps& caps) {
    if (!is_quantifier_free(f))
        throw std::invalid_argument("formula_to_semilinear: quantifier present");
    for (Var v : free_vars(f))
        if (v < 0 || v >= dim)
            throw std::invalid_argument("formula_to_semilinear: free variable outside 0..d-1");

    std::vector<LinearSet> out;
    for (const auto& conjunct : dnf(f, caps)) {
        // Partition literals; congruences fix residues, inequalities the rest.
        std::vector<Term> leqs;
        std::vector<std::pair<FormulaRef, bool>> divs; // (Dvd atom, negated)
        bool contradiction = false;
        for (const auto& lit : conjunct) {
            switch (lit->kind) {
                case Formula::Kind::Leq:
                    leqs.push_back(lit->term);
                    break;
                case Formula::Kind::Eq:
                    leqs.push_back(lit->term);
                    leqs.push_back(-lit->term);
                    break;
                case Formula::Kind::Dvd:
                    divs.emplace_back(lit, false);
                    break;
                case Formula::Kind::Not:
                    divs.emplace_back(lit->children[0], true);
                    break;
                case Formula::Kind::False:
                    contradiction = true;
                    break;
                default:
                    break;
            }
        }
        if (contradiction) continue;

        Int m_lcm = 1;
        for (const auto& [atom, neg] : divs) m_lcm = lcm_int(m_lcm, atom->modulus);

        // Enumerate residue vectors r in {0..M-1}^dim satisfying the
        // congruence literals; they are invariant under x -> x + M y.
        FinVector residue = zero_vector(dim);
        std::uint64_t visited = 0;
        std::function<void(int)> enumerate = [&](int pos) {
            if (++visited > caps.search_nodes)
                throw ResourceError("formula_to_semilinear: residue enumeration cap exceeded");
            if (pos == dim) {
                std::map<Var, Int> asg;
                for (int i = 0; i < dim; ++i) asg[i] = residue[static_cast<std::size_t>(i)];
                for (const auto& [atom, neg] : divs) {
                    Int val = atom->term.eval(asg) % atom->modulus;
                    if (val < 0) val += atom->modulus;
                    if ((val == 0) == neg) return;
                }
                // Inequalities over x = r + M y.
                std::vector<std::vector<Int>> rows;
                std::vector<Int> rhs;
                for (const auto& t : leqs) {
                    std::vector<Int> row(static_cast<std::size_t>(dim), Int(0));
                    for (const auto& [v, c] : t.coeffs) row[static_cast<std::size_t>(v)] = c * m_lcm;
                    rows.push_back(std::move(row));
                    rhs.push_back(-t.eval(asg));
                }
                const NatSolutions sols = solve_linear_ineq_nat(rows, rhs, dim, caps);
                std::vector<FinVector> periods;
                for (const auto& p : sols.periods) {
                    FinVector q(p.size());
                    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] * m_lcm;
                    periods.push_back(std::move(q));
                }
                for (const auto& b : sols.bases) {
                    FinVector base = residue;
                    for (std::size_t i = 0; i < base.size(); ++i) base[i] += b[i] * m_lcm;
                    out.push_back({std::move(base), periods});
                }
                return;
            }
            for (Int r = 0; r < m_lcm; ++r) {
                residue[static_cast<std::size_t>(pos)] = r;
                enumerate(pos + 1);
            }
        };
        enumerate(0);
    }
    return SemilinearSet(dim, std::move(out));
}

// -- complement and inclusion ----------------------------------------------------

SemilinearSet sl_complement(const SemilinearSet& s, const Caps& caps) {
    if (s.empty()) return SemilinearSet::full(s.dim());
    FormulaRef qf = cooper_eliminate(semilinear_to_formula(s), caps);
    FormulaRef negated = simplify(nnf(f_not(std::move(qf))));
    return formula_to_semilinear(negated, s.dim(), caps);
}

bool sl_inclusion(const SemilinearSet& s, const SemilinearSet& t, const Caps& caps) {
    if (s.dim() != t.dim()) throw std::invalid_argument("sl_inclusion: dimension mismatch");
    const FormulaRef target = semilinear_to_formula(t);
    for (const auto& comp : s.components()) {
        // forall x: x in comp -> x in t, one component at a time keeps the
        // eliminated formulas small.
        FormulaRef lhs = semilinear_to_formula(SemilinearSet(s.dim(), {comp}));
        FormulaRef sentence = f_implies(std::move(lhs), target);
        for (int i = s.dim() - 1; i >= 0; --i) sentence = f_forall(i, std::move(sentence));
        if (!decide_sentence(sentence, caps)) return false;
    }
    return true;
}

bool sl_equivalent(const SemilinearSet& s, const SemilinearSet& t, const Caps& caps) {
    return sl_inclusion(s, t, caps) && sl_inclusion(t, s, caps);
}

// -- Parikh image of an NFA --------------------------------------------------------

namespace {

using StateSet = std::vector<bool>;

// Parikh vectors of the simple cycles whose states all lie in `inside`.
// Cycles are enumerated from their minimal state to avoid rotations.
std::vector<FinVector> simple_cycle_vectors(const Nfa& a, const StateSet& inside,
                                            const Caps& caps) {
    std::vector<FinVector> cycles;
    std::uint64_t steps = 0;
    const int n = a.num_states();
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    FinVector psi = zero_vector(a.alphabet.size());

    std::function<void(int, int)> dfs = [&](int start, int q) {
        if (++steps > caps.search_nodes)
            throw ResourceError("parikh_of_nfa: cycle enumeration cap exceeded");
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                if (p < start || !inside[static_cast<std::size_t>(p)]) continue;
                psi[static_cast<std::size_t>(l)] += 1;
                if (p == start) {
                    cycles.push_back(psi);
                } else if (!on_path[static_cast<std::size_t>(p)]) {
                    on_path[static_cast<std::size_t>(p)] = true;
                    dfs(start, p);
                    on_path[static_cast<std::size_t>(p)] = false;
                }
                psi[static_cast<std::size_t>(l)] -= 1;
            }
    };
    for (int s = 0; s < n; ++s) {
        if (!inside[static_cast<std::size_t>(s)]) continue;
        on_path[static_cast<std::size_t>(s)] = true;
        dfs(s, s);
        on_path[static_cast<std::size_t>(s)] = false;
    }
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    return cycles;
}

struct SearchNode {
    int state;
    StateSet visited;
    FinVector psi;
};

} // namespace

SemilinearSet parikh_of_nfa(const Nfa& input, const Caps& caps) {
    const Nfa a = nfa_trim(input);
    const int dim = a.alphabet.size();
    const int n = a.num_states();
    const Int max_len = Int(n) * n + n;

    // Cycle vectors per visited set, computed on demand.
    std::map<StateSet, std::vector<FinVector>> cycle_cache;
    auto cycles_of = [&](const StateSet& set) -> const std::vector<FinVector>& {
        auto it = cycle_cache.find(set);
        if (it == cycle_cache.end())
            it = cycle_cache.emplace(set, simple_cycle_vectors(a, set, caps)).first;
        return it->second;
    };

    // Kept Parikh vectors per (state, visited set). A new vector whose
    // difference from a kept one is generated by the cycles of the visited
    // set adds nothing: any base reached from it is reached from the kept
    // node with the difference absorbed into the periods.
    std::map<std::pair<int, StateSet>, std::vector<FinVector>> kept;
    std::deque<SearchNode> frontier;
    std::uint64_t nodes = 0;

    auto offer = [&](SearchNode node) {
        auto& list = kept[{node.state, node.visited}];
        const auto& cycles = cycles_of(node.visited);
        for (const auto& prev : list) {
            FinVector diff = node.psi;
            bool geq = true;
            for (std::size_t i = 0; i < diff.size(); ++i) {
                diff[i] -= prev[i];
                if (diff[i] < 0) {
                    geq = false;
                    break;
                }
            }
            if (geq && in_monoid(diff, cycles)) return; // redundant
        }
        list.push_back(node.psi);
        if (++nodes > caps.search_nodes)
            throw ResourceError("parikh_of_nfa: search node cap exceeded");
        frontier.push_back(std::move(node));
    };

    for (int q : a.initial) {
        StateSet visited(static_cast<std::size_t>(n), false);
        visited[static_cast<std::size_t>(q)] = true;
        offer({q, std::move(visited), zero_vector(dim)});
    }

    std::vector<std::pair<StateSet, FinVector>> found; // (exact visited set, base)
    while (!frontier.empty()) {
        SearchNode node = std::move(frontier.front());
        frontier.pop_front();
        if (a.is_accepting(node.state)) found.emplace_back(node.visited, node.psi);
        Int length = 0;
        for (const auto& x : node.psi) length += x;
        if (length >= max_len) continue;
        for (int l = 0; l < dim; ++l)
            for (int p : a.delta[static_cast<std::size_t>(node.state)][static_cast<std::size_t>(l)]) {
                SearchNode succ{p, node.visited, node.psi};
                succ.visited[static_cast<std::size_t>(p)] = true;
                succ.psi[static_cast<std::size_t>(l)] += 1;
                offer(std::move(succ));
            }
    }

    // One component per recorded base; drop bases subsumed by another base
    // with the same period set.
    std::map<StateSet, std::vector<FinVector>> by_set;
    for (auto& [set, base] : found) by_set[set].push_back(std::move(base));
    std::vector<LinearSet> components;
    for (auto& [set, bases] : by_set) {
        const auto& periods = cycles_of(set);
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        std::vector<FinVector> keep;
        for (const auto& b : bases) {
            bool redundant = false;
            for (const auto& k : keep) {
                FinVector diff = b;
                bool geq = true;
                for (std::size_t i = 0; i < diff.size(); ++i) {
                    diff[i] -= k[i];
                    if (diff[i] < 0) {
                        geq = false;
                        break;
                    }
                }
                if (geq && in_monoid(diff, periods)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(b);
        }
        for (auto& b : keep) components.push_back({std::move(b), periods});
    }
    return SemilinearSet(dim, std::move(components));
}

} // namespace jumpomega
