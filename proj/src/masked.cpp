#include "jumpomega/masked.hpp"

#include <algorithm>

namespace jumpomega {

Mask::Mask(std::vector<bool> bits) : inf(std::move(bits)) {
    bool any = false;
    for (bool b : inf) any = any || b;
    if (!any) throw std::invalid_argument("mask: at least one coordinate must be infinite");
}

std::vector<int> Mask::finite_letters() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (!inf[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<int> Mask::infinite_letters() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (inf[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<Mask> all_masks(int dim) {
    if (dim < 1 || dim > 20) throw std::invalid_argument("all_masks: unsupported dimension");
    std::vector<Mask> out;
    for (unsigned bits = 1; bits < (1u << dim); ++bits) {
        std::vector<bool> inf(static_cast<std::size_t>(dim), false);
        for (int i = 0; i < dim; ++i)
            if (bits & (1u << i)) inf[static_cast<std::size_t>(i)] = true;
        out.emplace_back(std::move(inf));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExtVector::ExtVector(FinVector finite_part, std::vector<bool> inf_flags)
    : fin(std::move(finite_part)), inf(std::move(inf_flags)) {
    if (fin.size() != inf.size()) throw std::invalid_argument("extvector: size mismatch");
    bool any = false;
    for (bool b : inf) any = any || b;
    if (!any) throw std::invalid_argument("extvector: needs an infinite coordinate");
    for (const auto& x : fin)
        if (x < 0) throw std::invalid_argument("extvector: negative entry");
}

FinVector ExtVector::finite_part() const {
    FinVector out = fin;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (inf[i]) out[i] = 0;
    return out;
}

bool ExtVector::operator<(const ExtVector& o) const {
    if (inf != o.inf) return inf < o.inf;
    return finite_part() < o.finite_part();
}

bool ExtVector::operator==(const ExtVector& o) const {
    return inf == o.inf && finite_part() == o.finite_part();
}

ExtVector psi_upword(const UpWord& w, const Alphabet& sigma) {
    std::vector<bool> inf(static_cast<std::size_t>(sigma.size()), false);
    for (char c : w.period()) inf[static_cast<std::size_t>(sigma.index(c))] = true;
    FinVector fin = psi_word(w.prefix(), sigma);
    return ExtVector(std::move(fin), std::move(inf));
}

void MaskedSemilinearSet::set_part(const Mask& m, SemilinearSet s) {
    if (m.dim() != alphabet_.size())
        throw std::invalid_argument("masked set: mask dimension mismatch");
    if (s.dim() != alphabet_.size())
        throw std::invalid_argument("masked set: component dimension mismatch");
    canonical_ = false;
    if (s.empty())
        parts_.erase(m);
    else
        parts_.insert_or_assign(m, std::move(s));
}

SemilinearSet MaskedSemilinearSet::part(const Mask& m) const {
    auto it = parts_.find(m);
    return it == parts_.end() ? SemilinearSet(alphabet_.size()) : it->second;
}

MaskedSemilinearSet canonicalize(const MaskedSemilinearSet& m) {
    if (m.canonical()) return m;
    MaskedSemilinearSet out(m.alphabet());
    const int dim = m.alphabet().size();
    for (const auto& [mask, set] : m.parts()) {
        std::vector<LinearSet> comps;
        for (const auto& comp : set.components()) {
            LinearSet c;
            c.base = comp.base;
            for (int i : mask.infinite_letters()) c.base[static_cast<std::size_t>(i)] = 0;
            for (const auto& p : comp.periods) {
                FinVector q = p;
                for (int i : mask.infinite_letters()) q[static_cast<std::size_t>(i)] = 0;
                c.periods.push_back(std::move(q));
            }
            for (int i : mask.infinite_letters()) c.periods.push_back(unit_vector(dim, i));
            comps.push_back(std::move(c));
        }
        out.set_part(mask, SemilinearSet(dim, std::move(comps)));
    }
    out.canonical_ = true;
    return out;
}

bool masked_membership(const ExtVector& x, const MaskedSemilinearSet& m) {
    if (x.dim() != m.alphabet().size())
        throw std::invalid_argument("masked_membership: alphabet mismatch");
    const MaskedSemilinearSet canon = canonicalize(m);
    auto it = canon.parts().find(x.mask());
    if (it == canon.parts().end()) return false;
    return sl_membership(x.finite_part(), it->second);
}

MaskedSemilinearSet masked_intersect(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                                     const Caps& caps) {
    require_same_alphabet(a.alphabet(), b.alphabet(), "masked_intersect");
    const MaskedSemilinearSet ca = canonicalize(a);
    const MaskedSemilinearSet cb = canonicalize(b);
    MaskedSemilinearSet out(a.alphabet());
    for (const auto& [mask, sa] : ca.parts()) {
        auto it = cb.parts().find(mask);
        if (it == cb.parts().end()) continue;
        out.set_part(mask, sl_intersect(sa, it->second, caps));
    }
    return canonicalize(out);
}

MaskedSemilinearSet masked_complement(const MaskedSemilinearSet& a, const Caps& caps) {
    const MaskedSemilinearSet ca = canonicalize(a);
    MaskedSemilinearSet out(a.alphabet());
    for (const Mask& mask : all_masks(a.alphabet().size()))
        out.set_part(mask, sl_complement(ca.part(mask), caps));
    return canonicalize(out);
}

bool masked_inclusion(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                      const Caps& caps) {
    require_same_alphabet(a.alphabet(), b.alphabet(), "masked_inclusion");
    const MaskedSemilinearSet ca = canonicalize(a);
    const MaskedSemilinearSet cb = canonicalize(b);
    for (const auto& [mask, sa] : ca.parts()) {
        auto it = cb.parts().find(mask);
        if (it == cb.parts().end()) return false; // sa is nonempty by construction
        if (!sl_inclusion(sa, it->second, caps)) return false;
    }
    return true;
}

bool masked_equivalent(const MaskedSemilinearSet& a, const MaskedSemilinearSet& b,
                       const Caps& caps) {
    return masked_inclusion(a, b, caps) && masked_inclusion(b, a, caps);
}

bool check_canonical_form(const MaskedSemilinearSet& m) {
    const int dim = m.alphabet().size();
    for (const auto& [mask, set] : m.parts()) {
        const auto infinite = mask.infinite_letters();
        for (const auto& comp : set.components()) {
            for (int i : infinite)
                if (comp.base[static_cast<std::size_t>(i)] != 0) return false;
            // every unit of m|inf present; all other periods zero on m|inf
            for (int i : infinite) {
                const FinVector unit = unit_vector(dim, i);
                if (std::find(comp.periods.begin(), comp.periods.end(), unit) ==
                    comp.periods.end())
                    return false;
            }
            for (const auto& p : comp.periods) {
                bool is_unit_of_mask = false;
                for (int i : infinite)
                    if (p == unit_vector(dim, i)) is_unit_of_mask = true;
                if (is_unit_of_mask) continue;
                for (int i : infinite)
                    if (p[static_cast<std::size_t>(i)] != 0) return false;
            }
        }
    }
    return true;
}

namespace {

// Shifts every variable, free and bound alike, by a fixed offset; the
// binding structure is preserved.
FormulaRef shift_vars(const FormulaRef& f, Var offset) {
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return f;
        case Formula::Kind::Leq:
        case Formula::Kind::Eq:
        case Formula::Kind::Dvd: {
            Term t;
            t.constant = f->term.constant;
            for (const auto& [v, c] : f->term.coeffs) t.coeffs[v + offset] = c;
            return std::make_shared<const Formula>(
                Formula{f->kind, std::move(t), f->modulus, {}, -1});
        }
        default: {
            std::vector<FormulaRef> children;
            for (const auto& c : f->children) children.push_back(shift_vars(c, offset));
            return std::make_shared<const Formula>(Formula{
                f->kind, {}, {}, std::move(children), f->var < 0 ? -1 : f->var + offset});
        }
    }
}

} // namespace

bool debug_is_oblivious(const SemilinearSet& s, const Mask& m, const Caps& caps) {
    const int d = s.dim();
    // u in S and v agreeing with u on m|0 imply v in S. The u copy uses
    // variables 0..d-1, the v copy 2d..3d-1, keeping the existential
    // variables of the two formulas apart.
    FormulaRef in_u = semilinear_to_formula(s);
    FormulaRef in_v = shift_vars(semilinear_to_formula(s), 2 * d);
    std::vector<FormulaRef> agree;
    for (int i : m.finite_letters())
        agree.push_back(f_eq(Term::of_var(i), Term::of_var(i + 2 * d)));
    FormulaRef body = f_implies(f_and({f_and(std::move(agree)), in_u}), in_v);
    std::vector<Var> outer;
    for (int i = 0; i < d; ++i) outer.push_back(i);
    for (int i = 0; i < d; ++i) outer.push_back(2 * d + i);
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) body = f_forall(*it, body);
    return decide_sentence(body, caps);
}

} // namespace jumpomega
