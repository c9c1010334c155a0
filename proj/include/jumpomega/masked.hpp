// masked.hpp -- masked semilinear sets: Parikh images of infinite words
#ifndef JUMPOMEGA_MASKED_HPP
#define JUMPOMEGA_MASKED_HPP

#include <map>
#include <vector>

#include "jumpomega/alphabet.hpp"
#include "jumpomega/semilinear.hpp"
#include "jumpomega/upword.hpp"

namespace jumpomega {

// A vector in {0,inf}^Sigma with at least one inf coordinate. inf[i] tells
// whether letter i occurs infinitely often.
struct Mask {
    std::vector<bool> inf;

    explicit Mask(std::vector<bool> bits);

    int dim() const { return static_cast<int>(inf.size()); }
    bool is_infinite(int i) const { return inf[static_cast<std::size_t>(i)]; }

    std::vector<int> finite_letters() const;   // m|0
    std::vector<int> infinite_letters() const; // m|inf

    bool operator<(const Mask& o) const { return inf < o.inf; }
    bool operator==(const Mask& o) const { return inf == o.inf; }
};

/// All 2^dim - 1 masks of the given dimension, in bit-pattern order.
std::vector<Mask> all_masks(int dim);

// A vector in N_inf^Sigma with at least one inf coordinate: the Parikh
// image of some infinite word. Finite entries live in `fin`; entries
// under an inf flag are ignored.
struct ExtVector {
    FinVector fin;
    std::vector<bool> inf;

    ExtVector(FinVector finite_part, std::vector<bool> inf_flags);

    int dim() const { return static_cast<int>(inf.size()); }
    Mask mask() const { return Mask(inf); }
    /// Finite part with masked coordinates zeroed (the x of x + m).
    FinVector finite_part() const;

    bool operator<(const ExtVector& o) const;
    bool operator==(const ExtVector& o) const;
};

/// Parikh image of an ultimately periodic word: inf on the letters of the
/// (normalized) period, counts from the prefix elsewhere.
ExtVector psi_upword(const UpWord& w, const Alphabet& sigma);

// Finite union of S_m + m over masks m; absent masks have S_m empty.
// After canonicalize() every component is in canonical m-oblivious form:
// bases and non-unit periods are zero on m|inf and the unit vectors of
// m|inf are all present.
class MaskedSemilinearSet {
public:
    explicit MaskedSemilinearSet(Alphabet sigma) : alphabet_(std::move(sigma)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Mask, SemilinearSet>& parts() const { return parts_; }
    bool canonical() const { return canonical_; }
    bool empty() const { return parts_.empty(); }

    /// Sets S_m; an empty set removes the mask. Clears the canonical flag.
    void set_part(const Mask& m, SemilinearSet s);
    /// S_m, or the empty set for absent masks.
    SemilinearSet part(const Mask& m) const;

private:
    friend MaskedSemilinearSet canonicalize(const MaskedSemilinearSet&);

    Alphabet alphabet_;
    std::map<Mask, SemilinearSet> parts_;
    bool canonical_ = false;
};

/// Canonical oblivious form: zero the masked coordinates of every base and
/// period and adjoin the unit periods of m|inf. Preserves the represented
/// subset of N_inf^Sigma.
MaskedSemilinearSet canonicalize(const MaskedSemilinearSet& m);

bool masked_membership(const ExtVector& x, const MaskedSemilinearSet& m);

/// Mask-wise intersection; result is canonical.
MaskedSemilinearSet masked_intersect(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                                     const Caps& caps = {});

/// Mask-wise complement over all masks; result is canonical. Soundness
/// requires the oblivious inputs that canonicalization provides.
MaskedSemilinearSet masked_complement(const MaskedSemilinearSet& a, const Caps& caps = {});

bool masked_inclusion(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                      const Caps& caps = {});
bool masked_equivalent(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                       const Caps& caps = {});

/// Structural check of the canonical-form conditions (test support).
bool check_canonical_form(const MaskedSemilinearSet& m);

/// Semantic obliviousness of S_m via the Presburger engine (test support):
/// vectors agreeing on m|0 are members together.
bool debug_is_oblivious(const SemilinearSet& s, const Mask& m, const Caps& caps = {});

} // namespace jumpomega

#endif
