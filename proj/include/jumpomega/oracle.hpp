// oracle.hpp -- brute-force baselines used to cross-validate the library
#ifndef JUMPOMEGA_ORACLE_HPP
#define JUMPOMEGA_ORACLE_HPP

#include <functional>
#include <set>

#include "jumpomega/nfa.hpp"
#include "jumpomega/semilinear.hpp"
#include "jumpomega/upword.hpp"

namespace jumpomega::oracle {

/// Parikh images of all accepted words of length <= maxlen, by exhaustive
/// word enumeration. maxlen is limited to 12.
std::set<FinVector> enum_parikh_language(const Nfa& n, int maxlen);

/// Direct k-window jumping membership: lasso search over the product of
/// the automaton with the window-choice graph of u.v^omega, trying every
/// permutation of every aligned window. Independent of the B_k
/// construction. `unroll` must be at least |Q| * lcm(k, |v|).
bool brute_window_member(const BuchiAutomaton& a, int k, const UpWord& w, int unroll,
                         const Caps& caps = {});

/// Does sl_membership agree with `pred` on every point of {0..box}^d?
bool grid_check_semilinear(const SemilinearSet& s,
                           const std::function<bool(const FinVector&)>& pred, int box);

} // namespace jumpomega::oracle

#endif
