// semilinear.hpp -- linear and semilinear sets over N^Sigma, their boolean
// algebra, and Parikh images of NFAs
#ifndef JUMPOMEGA_SEMILINEAR_HPP
#define JUMPOMEGA_SEMILINEAR_HPP

#include <string>
#include <vector>

#include "jumpomega/alphabet.hpp"
#include "jumpomega/base.hpp"
#include "jumpomega/nfa.hpp"
#include "jumpomega/presburger.hpp"

namespace jumpomega {

// Lin(base, periods) = base + N-combinations of the periods.
struct LinearSet {
    FinVector base;
    std::vector<FinVector> periods;
};

// A finite union of linear sets of a common dimension. The representation
// is normalized on construction: zero periods dropped, periods and
// components sorted and deduplicated. The empty union keeps its dimension.
class SemilinearSet {
public:
    explicit SemilinearSet(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("semilinear: dimension must be >= 1");
    }
    SemilinearSet(int dim, std::vector<LinearSet> components);

    int dim() const { return dim_; }
    const std::vector<LinearSet>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    /// All of N^dim: Lin(0, unit vectors).
    static SemilinearSet full(int dim);

    bool operator==(const SemilinearSet& o) const; // representation equality

private:
    int dim_;
    std::vector<LinearSet> components_;
};

// -- vector helpers -------------------------------------------------------

FinVector zero_vector(int dim);
FinVector unit_vector(int dim, int i);
bool vector_is_zero(const FinVector& v);
FinVector vector_add(const FinVector& a, const FinVector& b);

/// Is v a sum (with repetition) of the given generators?
bool in_monoid(const FinVector& v, const std::vector<FinVector>& generators);

/// Parikh image of a finite word.
FinVector psi_word(const std::string& word, const Alphabet& sigma);

// -- set operations -------------------------------------------------------

bool sl_membership(const FinVector& v, const SemilinearSet& s);

SemilinearSet sl_intersect(const SemilinearSet& s, const SemilinearSet& t,
                           const Caps& caps = {});

/// Complement within N^dim, through the Presburger engine.
SemilinearSet sl_complement(const SemilinearSet& s, const Caps& caps = {});

bool sl_inclusion(const SemilinearSet& s, const SemilinearSet& t, const Caps& caps = {});
bool sl_equivalent(const SemilinearSet& s, const SemilinearSet& t, const Caps& caps = {});

/// Emptiness is syntactic: linear components are never empty.
inline bool sl_is_empty(const SemilinearSet& s) { return s.empty(); }

// -- conversions with the Presburger engine --------------------------------

/// The set {x in N^d : f(x)} of a quantifier-free formula over variables
/// 0..d-1. Congruences are removed by residue enumeration; the remaining
/// inequality systems are solved into minimal solutions plus Hilbert bases.
SemilinearSet formula_to_semilinear(const FormulaRef& f, int dim, const Caps& caps = {});

/// An existential formula over variables 0..d-1 defining exactly s.
FormulaRef semilinear_to_formula(const SemilinearSet& s);

// -- Parikh images ----------------------------------------------------------

/// The exact Parikh image of the finite-word language of n. Enumerates
/// visited-state sets: per set S, simple cycles inside S become periods and
/// accepting paths visiting exactly S become bases.
SemilinearSet parikh_of_nfa(const Nfa& n, const Caps& caps = {});

} // namespace jumpomega

#endif
