#include "jumpomega/presburger.hpp"

#include <algorithm>
#include <cassert>

namespace jumpomega {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

// Floor division and nonnegative remainder (cpp_int / truncates to zero).
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

} // namespace

// -- Term ----------------------------------------------------------------

Term Term::of_const(Int c) {
    Term t;
    t.constant = std::move(c);
    return t;
}

Term Term::of_var(Var v) {
    Term t;
    t.coeffs[v] = 1;
    return t;
}

Int Term::coeff(Var v) const {
    auto it = coeffs.find(v);
    return it == coeffs.end() ? Int(0) : it->second;
}

Term Term::operator+(const Term& o) const {
    Term r = *this;
    r.constant += o.constant;
    for (const auto& [v, c] : o.coeffs) {
        Int& slot = r.coeffs[v];
        slot += c;
        if (slot == 0) r.coeffs.erase(v);
    }
    return r;
}

Term Term::operator-() const {
    Term r;
    r.constant = -constant;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = -c;
    return r;
}

Term Term::operator-(const Term& o) const { return *this + (-o); }

Term Term::operator*(const Int& k) const {
    Term r;
    if (k == 0) return r;
    r.constant = constant * k;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = c * k;
    return r;
}

Term Term::substituted(Var v, const Term& t) const {
    auto it = coeffs.find(v);
    if (it == coeffs.end()) return *this;
    const Int c = it->second;
    Term r = *this;
    r.coeffs.erase(v);
    return r + t * c;
}

Int Term::eval(const std::map<Var, Int>& assignment) const {
    Int r = constant;
    for (const auto& [v, c] : coeffs) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("term eval: unassigned variable");
        r += c * it->second;
    }
    return r;
}

int Term::compare(const Term& o) const {
    if (constant != o.constant) return constant < o.constant ? -1 : 1;
    if (coeffs != o.coeffs) return coeffs < o.coeffs ? -1 : 1;
    return 0;
}

// -- builders ------------------------------------------------------------

namespace {

FormulaRef make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

const FormulaRef& true_singleton() {
    static const FormulaRef t = make({Formula::Kind::True, {}, {}, {}, -1});
    return t;
}
const FormulaRef& false_singleton() {
    static const FormulaRef f = make({Formula::Kind::False, {}, {}, {}, -1});
    return f;
}

} // namespace

FormulaRef f_true() { return true_singleton(); }
FormulaRef f_false() { return false_singleton(); }
FormulaRef f_bool(bool b) { return b ? f_true() : f_false(); }

FormulaRef f_leq(Term t) { return make({Formula::Kind::Leq, std::move(t), {}, {}, -1}); }
FormulaRef f_leq(const Term& lhs, const Term& rhs) { return f_leq(lhs - rhs); }
FormulaRef f_eq(Term t) { return make({Formula::Kind::Eq, std::move(t), {}, {}, -1}); }
FormulaRef f_eq(const Term& lhs, const Term& rhs) { return f_eq(lhs - rhs); }

FormulaRef f_dvd(Int m, Term t) {
    if (m < 0) m = -m;
    return make({Formula::Kind::Dvd, std::move(t), std::move(m), {}, -1});
}

FormulaRef f_cong(const Term& t, const Int& c, const Int& m) {
    if (m < 2) throw std::invalid_argument("congruence: modulus must be >= 2");
    return f_dvd(m, t - Term::of_const(c));
}

FormulaRef f_not(FormulaRef f) { return make({Formula::Kind::Not, {}, {}, {std::move(f)}, -1}); }

FormulaRef f_and(std::vector<FormulaRef> children) {
    return make({Formula::Kind::And, {}, {}, std::move(children), -1});
}

FormulaRef f_or(std::vector<FormulaRef> children) {
    return make({Formula::Kind::Or, {}, {}, std::move(children), -1});
}

FormulaRef f_implies(FormulaRef lhs, FormulaRef rhs) {
    return f_or({f_not(std::move(lhs)), std::move(rhs)});
}

FormulaRef f_exists(Var v, FormulaRef body) {
    return make({Formula::Kind::Exists, {}, {}, {std::move(body)}, v});
}

FormulaRef f_forall(Var v, FormulaRef body) {
    return make({Formula::Kind::Forall, {}, {}, {std::move(body)}, v});
}

// -- structural helpers ---------------------------------------------------

namespace {

void collect_free(const FormulaRef& f, std::set<Var>& bound, std::set<Var>& out) {
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return;
        case Formula::Kind::Leq:
        case Formula::Kind::Eq:
        case Formula::Kind::Dvd:
            for (const auto& [v, c] : f->term.coeffs)
                if (!bound.count(v)) out.insert(v);
            return;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            const bool was_bound = bound.count(f->var) > 0;
            bound.insert(f->var);
            collect_free(f->children[0], bound, out);
            if (!was_bound) bound.erase(f->var);
            return;
        }
        default:
            for (const auto& c : f->children) collect_free(c, bound, out);
    }
}

} // namespace

std::set<Var> free_vars(const FormulaRef& f) {
    std::set<Var> bound, out;
    collect_free(f, bound, out);
    return out;
}

bool is_quantifier_free(const FormulaRef& f) {
    if (f->kind == Formula::Kind::Exists || f->kind == Formula::Kind::Forall) return false;
    for (const auto& c : f->children)
        if (!is_quantifier_free(c)) return false;
    return true;
}

int formula_compare(const FormulaRef& a, const FormulaRef& b) {
    if (a->kind != b->kind) return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
    if (int c = a->term.compare(b->term); c != 0) return c;
    if (a->modulus != b->modulus) return a->modulus < b->modulus ? -1 : 1;
    if (a->var != b->var) return a->var < b->var ? -1 : 1;
    if (a->children.size() != b->children.size())
        return a->children.size() < b->children.size() ? -1 : 1;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (int c = formula_compare(a->children[i], b->children[i]); c != 0) return c;
    return 0;
}

// -- simplification --------------------------------------------------------

namespace {

FormulaRef simplify_leq(Term t) {
    if (t.is_constant()) return f_bool(t.constant <= 0);
    Int g = 0;
    for (const auto& [v, c] : t.coeffs) g = gcd_int(g, c);
    if (g > 1) {
        for (auto& [v, c] : t.coeffs) c /= g;
        t.constant = cdiv(t.constant, g);
    }
    return f_leq(std::move(t));
}

FormulaRef simplify_eq(Term t) {
    if (t.is_constant()) return f_bool(t.constant == 0);
    Int g = 0;
    for (const auto& [v, c] : t.coeffs) g = gcd_int(g, c);
    if (g > 1) {
        if (t.constant % g != 0) return f_false();
        for (auto& [v, c] : t.coeffs) c /= g;
        t.constant /= g;
    }
    return f_eq(std::move(t));
}

FormulaRef simplify_dvd(Int m, Term t) {
    if (m == 0) return simplify_eq(std::move(t));
    if (m == 1) return f_true();
    for (auto it = t.coeffs.begin(); it != t.coeffs.end();) {
        it->second = mod_floor(it->second, m);
        it = (it->second == 0) ? t.coeffs.erase(it) : std::next(it);
    }
    t.constant = mod_floor(t.constant, m);
    if (t.is_constant()) return f_bool(t.constant == 0);
    return f_dvd(std::move(m), std::move(t));
}

FormulaRef simplify_connective(Formula::Kind kind, std::vector<FormulaRef> children) {
    const bool conj = kind == Formula::Kind::And;
    const FormulaRef unit = conj ? f_true() : f_false();
    const FormulaRef zero = conj ? f_false() : f_true();
    std::vector<FormulaRef> flat;
    for (auto& c : children) {
        if (c->kind == zero->kind) return zero;
        if (c->kind == unit->kind) continue;
        if (c->kind == kind)
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        else
            flat.push_back(std::move(c));
    }
    std::sort(flat.begin(), flat.end(),
              [](const FormulaRef& a, const FormulaRef& b) { return formula_compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end(),
                           [](const FormulaRef& a, const FormulaRef& b) {
                               return formula_compare(a, b) == 0;
                           }),
               flat.end());
    // X and not X annihilate.
    for (const auto& c : flat) {
        if (c->kind != Formula::Kind::Not) continue;
        for (const auto& d : flat)
            if (formula_compare(c->children[0], d) == 0) return zero;
    }
    if (flat.empty()) return unit;
    if (flat.size() == 1) return flat[0];
    return make({kind, {}, {}, std::move(flat), -1});
}

} // namespace

FormulaRef simplify(const FormulaRef& f) {
    switch (f->kind) {
        case Formula::Kind::True:
        case Formula::Kind::False:
            return f;
        case Formula::Kind::Leq:
            return simplify_leq(f->term);
        case Formula::Kind::Eq:
            return simplify_eq(f->term);
        case Formula::Kind::Dvd:
            return simplify_dvd(f->modulus, f->term);
        case Formula::Kind::Not: {
            FormulaRef c = simplify(f->children[0]);
            if (c->kind == Formula::Kind::True) return f_false();
            if (c->kind == Formula::Kind::False) return f_true();
            if (c->kind == Formula::Kind::Not) return c->children[0];
            return f_not(std::move(c));
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<FormulaRef> children;
            children.reserve(f->children.size());
            for (const auto& c : f->children) children.push_back(simplify(c));
            return simplify_connective(f->kind, std::move(children));
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            FormulaRef body = simplify(f->children[0]);
            if (body->kind == Formula::Kind::True || body->kind == Formula::Kind::False)
                return body;
            if (!free_vars(body).count(f->var)) return body;
            return make({f->kind, {}, {}, {std::move(body)}, f->var});
        }
    }
    return f;
}

FormulaRef nnf(const FormulaRef& f) {
    switch (f->kind) {
        case Formula::Kind::Not: {
            const FormulaRef& c = f->children[0];
            switch (c->kind) {
                case Formula::Kind::True:
                    return f_false();
                case Formula::Kind::False:
                    return f_true();
                case Formula::Kind::Leq:
                    // not (t <= 0)  <=>  -t + 1 <= 0
                    return f_leq(-c->term + Term::of_const(1));
                case Formula::Kind::Eq:
                    // not (t = 0)  <=>  t <= -1 or t >= 1
                    return f_or({f_leq(c->term + Term::of_const(1)),
                                 f_leq(-c->term + Term::of_const(1))});
                case Formula::Kind::Dvd:
                    return f; // negated divisibility is a literal
                case Formula::Kind::Not:
                    return nnf(c->children[0]);
                case Formula::Kind::And: {
                    std::vector<FormulaRef> out;
                    for (const auto& g : c->children) out.push_back(nnf(f_not(g)));
                    return f_or(std::move(out));
                }
                case Formula::Kind::Or: {
                    std::vector<FormulaRef> out;
                    for (const auto& g : c->children) out.push_back(nnf(f_not(g)));
                    return f_and(std::move(out));
                }
                case Formula::Kind::Exists:
                    return f_forall(c->var, nnf(f_not(c->children[0])));
                case Formula::Kind::Forall:
                    return f_exists(c->var, nnf(f_not(c->children[0])));
            }
            return f;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<FormulaRef> out;
            for (const auto& g : f->children) out.push_back(nnf(g));
            return make({f->kind, {}, {}, std::move(out), -1});
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            return make({f->kind, {}, {}, {nnf(f->children[0])}, f->var});
        default:
            return f;
    }
}

bool eval_qf(const FormulaRef& f, const std::map<Var, Int>& assignment) {
    switch (f->kind) {
        case Formula::Kind::True:
            return true;
        case Formula::Kind::False:
            return false;
        case Formula::Kind::Leq:
            return f->term.eval(assignment) <= 0;
        case Formula::Kind::Eq:
            return f->term.eval(assignment) == 0;
        case Formula::Kind::Dvd:
            return mod_floor(f->term.eval(assignment), f->modulus) == 0;
        case Formula::Kind::Not:
            return !eval_qf(f->children[0], assignment);
        case Formula::Kind::And:
            for (const auto& c : f->children)
                if (!eval_qf(c, assignment)) return false;
            return true;
        case Formula::Kind::Or:
            for (const auto& c : f->children)
                if (eval_qf(c, assignment)) return true;
            return false;
        default:
            throw std::invalid_argument("eval_qf: quantifier in formula");
    }
}

// -- DNF -------------------------------------------------------------------

namespace {

struct Budget {
    std::uint64_t used = 0;
    std::uint64_t cap;
    const char* what;

    void charge(std::uint64_t n) {
        used += n;
        if (used > cap) throw ResourceError(std::string(what) + ": atom budget exceeded");
    }
};

using Conjunct = std::vector<FormulaRef>;

bool is_literal(const FormulaRef& f) {
    switch (f->kind) {
        case Formula::Kind::Leq:
        case Formula::Kind::Eq:
        case Formula::Kind::Dvd:
            return true;
        case Formula::Kind::Not:
            return f->children[0]->kind == Formula::Kind::Dvd;
        default:
            return false;
    }
}

std::vector<Conjunct> dnf_rec(const FormulaRef& f, Budget& budget) {
    if (f->kind == Formula::Kind::True) return {{}};
    if (f->kind == Formula::Kind::False) return {};
    if (is_literal(f)) {
        budget.charge(1);
        return {{f}};
    }
    if (f->kind == Formula::Kind::Or) {
        std::vector<Conjunct> out;
        for (const auto& c : f->children) {
            auto sub = dnf_rec(c, budget);
            out.insert(out.end(), std::make_move_iterator(sub.begin()),
                       std::make_move_iterator(sub.end()));
        }
        return out;
    }
    if (f->kind == Formula::Kind::And) {
        std::vector<Conjunct> acc = {{}};
        for (const auto& c : f->children) {
            auto sub = dnf_rec(c, budget);
            std::vector<Conjunct> next;
            budget.charge(acc.size() * sub.size());
            for (const auto& left : acc)
                for (const auto& right : sub) {
                    Conjunct merged = left;
                    merged.insert(merged.end(), right.begin(), right.end());
                    next.push_back(std::move(merged));
                }
            acc = std::move(next);
            if (acc.empty()) return acc;
        }
        return acc;
    }
    throw std::invalid_argument("dnf: input must be quantifier-free and in NNF");
}

} // namespace

std::vector<std::vector<FormulaRef>> dnf(const FormulaRef& f, const Caps& caps) {
    if (!is_quantifier_free(f)) throw std::invalid_argument("dnf: quantifier present");
    Budget budget{0, caps.dnf_atoms, "dnf"};
    return dnf_rec(simplify(nnf(simplify(f))), budget);
}

// -- Cooper elimination -----------------------------------------------------

namespace {

// One literal of a conjunct, normalized with respect to the eliminated
// variable y (coefficient +1 after scaling).
struct DivLiteral {
    Int modulus;
    Term rest; // meaning: modulus | (y + rest)
    bool negated;
};

FormulaRef conjunct_to_formula(const Conjunct& lits) {
    return simplify(f_and(Conjunct(lits)));
}

// Eliminates `v` from a single conjunct of literals; returns a QF formula.
FormulaRef cooper_conjunct(Var v, const Conjunct& lits, Budget& budget) {
    Conjunct rest;                // literals not mentioning v
    std::vector<FormulaRef> with; // literals mentioning v
    for (const auto& l : lits) {
        const Term& t = l->kind == Formula::Kind::Not ? l->children[0]->term : l->term;
        (t.mentions(v) ? with : rest).push_back(l);
    }
    if (with.empty()) return conjunct_to_formula(rest);

    // Equality shortcut: v has a unit coefficient in some equation.
    for (std::size_t i = 0; i < with.size(); ++i) {
        const auto& l = with[i];
        if (l->kind != Formula::Kind::Eq) continue;
        const Int c = l->term.coeff(v);
        if (c != 1 && c != -1) continue;
        // c*v + r = 0  =>  v = -r/c
        Term r = l->term;
        r.coeffs.erase(v);
        const Term solution = (c == 1) ? -r : std::move(r);
        Conjunct out = rest;
        for (std::size_t j = 0; j < with.size(); ++j) {
            if (j == i) continue;
            const auto& m = with[j];
            if (m->kind == Formula::Kind::Not)
                out.push_back(f_not(f_dvd(m->children[0]->modulus,
                                          m->children[0]->term.substituted(v, solution))));
            else
                out.push_back(make({m->kind, m->term.substituted(v, solution), m->modulus, {}, -1}));
        }
        budget.charge(out.size());
        return conjunct_to_formula(out);
    }

    // Split equalities into a pair of inequalities, then scale every
    // literal so the variable's coefficient is +-L.
    std::vector<FormulaRef> ineqs; // Leq literals with v
    std::vector<DivLiteral> divs_raw;
    Int big_l = 1;
    for (const auto& l : with) {
        const FormulaRef base = l->kind == Formula::Kind::Not ? l->children[0] : l;
        big_l = lcm_int(big_l, base->term.coeff(v));
        if (l->kind == Formula::Kind::Eq) {
            ineqs.push_back(f_leq(l->term));
            ineqs.push_back(f_leq(-l->term));
        } else if (l->kind == Formula::Kind::Leq) {
            ineqs.push_back(l);
        }
    }

    std::vector<Term> uppers; // y <= a
    std::vector<Term> lowers; // y >= b
    std::vector<DivLiteral> divs;
    for (const auto& l : ineqs) {
        const Int c = l->term.coeff(v);
        Term r = l->term;
        r.coeffs.erase(v);
        if (c > 0) {
            const Int factor = big_l / c;
            uppers.push_back(-(r * factor)); // y <= -factor*r
        } else {
            const Int factor = big_l / -c;
            lowers.push_back(r * factor); // y >= factor*r
        }
    }
    for (const auto& l : with) {
        const bool negated = l->kind == Formula::Kind::Not;
        const FormulaRef base = negated ? l->children[0] : l;
        if (base->kind != Formula::Kind::Dvd) continue;
        const Int c = base->term.coeff(v);
        Term r = base->term;
        r.coeffs.erase(v);
        Int factor = big_l / (c > 0 ? c : -c);
        Int modulus = base->modulus * factor;
        // m | c*v + r  <=>  m*f | L*v + f*r (c>0)   or   m*f | L*v - f*r (c<0)
        Term rest_term = (c > 0) ? r * factor : -(r * factor);
        divs.push_back({std::move(modulus), std::move(rest_term), negated});
    }
    divs.push_back({big_l, Term{}, false}); // L | y

    Int period = 1;
    for (const auto& d : divs) period = lcm_int(period, d.modulus);

    auto substituted = [&](const Term& y_value) {
        // Conjunct with y := y_value.
        Conjunct out = rest;
        for (const auto& a : uppers) out.push_back(f_leq(y_value - a));
        for (const auto& b : lowers) out.push_back(f_leq(b - y_value));
        for (const auto& d : divs) {
            FormulaRef atom = f_dvd(d.modulus, y_value + d.rest);
            out.push_back(d.negated ? f_not(atom) : atom);
        }
        budget.charge(out.size());
        return conjunct_to_formula(out);
    };

    std::vector<FormulaRef> cases;
    if (lowers.empty()) {
        // No lower bound: only the divisibility residues matter.
        for (Int j = 1; j <= period; ++j) {
            Conjunct out = rest;
            for (const auto& d : divs) {
                FormulaRef atom = f_dvd(d.modulus, Term::of_const(j) + d.rest);
                out.push_back(d.negated ? f_not(atom) : atom);
            }
            budget.charge(out.size());
            cases.push_back(conjunct_to_formula(out));
        }
    } else {
        for (const auto& b : lowers)
            for (Int j = 1; j <= period; ++j)
                cases.push_back(substituted(b + Term::of_const(j - 1)));
    }
    return simplify(f_or(std::move(cases)));
}

FormulaRef eliminate_exists_qf(Var v, const FormulaRef& f, Budget& budget, const Caps& caps) {
    auto conjuncts = dnf(f, caps);
    std::vector<FormulaRef> cases;
    cases.reserve(conjuncts.size());
    for (const auto& c : conjuncts) cases.push_back(cooper_conjunct(v, c, budget));
    return simplify(f_or(std::move(cases)));
}

FormulaRef qe(const FormulaRef& f, Budget& budget, const Caps& caps) {
    switch (f->kind) {
        case Formula::Kind::Exists: {
            FormulaRef body = qe(f->children[0], budget, caps);
            // variables range over N: conjoin v >= 0
            FormulaRef guarded = f_and({f_leq(-Term::of_var(f->var)), std::move(body)});
            return eliminate_exists_qf(f->var, guarded, budget, caps);
        }
        case Formula::Kind::Forall: {
            FormulaRef body = qe(f->children[0], budget, caps);
            FormulaRef negated = simplify(nnf(f_not(std::move(body))));
            FormulaRef guarded = f_and({f_leq(-Term::of_var(f->var)), std::move(negated)});
            return simplify(f_not(eliminate_exists_qf(f->var, guarded, budget, caps)));
        }
        case Formula::Kind::Not:
            return simplify(f_not(qe(f->children[0], budget, caps)));
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<FormulaRef> out;
            for (const auto& c : f->children) out.push_back(qe(c, budget, caps));
            return simplify(make({f->kind, {}, {}, std::move(out), -1}));
        }
        default:
            return simplify(f);
    }
}

} // namespace

FormulaRef cooper_eliminate(const FormulaRef& f, const Caps& caps) {
    Budget budget{0, caps.dnf_atoms, "cooper_eliminate"};
    return qe(f, budget, caps);
}

bool decide_sentence(const FormulaRef& f, const Caps& caps) {
    if (!free_vars(f).empty())
        throw std::invalid_argument("decide_sentence: free variables present");
    FormulaRef g = cooper_eliminate(f, caps);
    if (g->kind == Formula::Kind::True) return true;
    if (g->kind == Formula::Kind::False) return false;
    // All atoms are constant after full elimination.
    return eval_qf(g, {});
}

// -- Hilbert bases -----------------------------------------------------------

namespace {

std::vector<Int> mat_vec(const std::vector<std::vector<Int>>& rows, const FinVector& x) {
    std::vector<Int> out(rows.size(), Int(0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out[r] += rows[r][i] * x[i];
    return out;
}

bool is_zero(const std::vector<Int>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool dominates_some(const std::vector<FinVector>& minimal, const FinVector& z) {
    for (const auto& m : minimal) {
        bool leq = true;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (m[i] > z[i]) {
                leq = false;
                break;
            }
        if (leq) return true;
    }
    return false;
}

} // namespace

std::vector<FinVector> hilbert_basis(const HomSystem& sys, const Caps& caps) {
    const int d = sys.dim;
    if (d < 1) throw std::invalid_argument("hilbert_basis: dimension must be >= 1");
    for (const auto& row : sys.rows)
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("hilbert_basis: row length mismatch");

    // Columns A e_i, used in the Contejean-Devie descent condition.
    std::vector<std::vector<Int>> columns(static_cast<std::size_t>(d),
                                          std::vector<Int>(sys.rows.size(), Int(0)));
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
        for (int i = 0; i < d; ++i) columns[static_cast<std::size_t>(i)][r] = sys.rows[r][static_cast<std::size_t>(i)];

    std::vector<FinVector> minimal;
    std::set<FinVector> frontier;
    for (int i = 0; i < d; ++i) {
        FinVector e(static_cast<std::size_t>(d), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        frontier.insert(std::move(e));
    }
    std::uint64_t nodes = frontier.size();

    while (!frontier.empty()) {
        std::set<FinVector> next;
        for (const auto& z : frontier) {
            const auto az = mat_vec(sys.rows, z);
            if (is_zero(az)) {
                if (!dominates_some(minimal, z)) minimal.push_back(z);
                continue;
            }
            for (int i = 0; i < d; ++i) {
                // extend only while the defect strictly decreases in direction i
                Int dot = 0;
                for (std::size_t r = 0; r < az.size(); ++r)
                    dot += az[r] * columns[static_cast<std::size_t>(i)][r];
                if (dot >= 0) continue;
                FinVector z2 = z;
                z2[static_cast<std::size_t>(i)] += 1;
                if (dominates_some(minimal, z2)) continue;
                if (next.insert(std::move(z2)).second) {
                    if (++nodes > caps.hilbert_nodes)
                        throw ResourceError("hilbert_basis: frontier node cap exceeded");
                }
            }
        }
        frontier = std::move(next);
    }

    std::sort(minimal.begin(), minimal.end());
    // The by-layer search can register two incomparable-at-the-time
    // solutions where one later turns out dominated; filter once more.
    std::vector<FinVector> result;
    for (const auto& m : minimal) {
        bool dominated = false;
        for (const auto& o : minimal) {
            if (&o == &m || o == m) continue;
            bool leq = true;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (o[i] > m[i]) {
                    leq = false;
                    break;
                }
            if (leq) {
                dominated = true;
                break;
            }
        }
        if (!dominated) result.push_back(m);
    }
    return result;
}

NatSolutions solve_linear_eq_nat(const std::vector<std::vector<Int>>& rows,
                                 const std::vector<Int>& rhs, int dim, const Caps& caps) {
    if (rows.size() != rhs.size())
        throw std::invalid_argument("solve_linear_eq_nat: rhs size mismatch");
    // Homogenize with a scale variable t: A y - c t = 0. Minimal solutions
    // with t = 0 generate the homogeneous cone, those with t = 1 are the
    // minimal inhomogeneous solutions.
    HomSystem ext;
    ext.dim = dim + 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Int> row = rows[r];
        row.push_back(-rhs[r]);
        ext.rows.push_back(std::move(row));
    }
    NatSolutions out;
    std::set<FinVector> bases, periods;
    for (const auto& sol : hilbert_basis(ext, caps)) {
        const Int& t = sol[static_cast<std::size_t>(dim)];
        FinVector y(sol.begin(), sol.begin() + dim);
        if (t == 0) {
            if (!is_zero(y)) periods.insert(std::move(y));
        } else if (t == 1) {
            bases.insert(std::move(y));
        }
        // t >= 2 solutions are not needed to cover t = 1.
    }
    out.bases.assign(bases.begin(), bases.end());
    out.periods.assign(periods.begin(), periods.end());
    return out;
}

NatSolutions solve_linear_ineq_nat(const std::vector<std::vector<Int>>& rows,
                                   const std::vector<Int>& rhs, int dim, const Caps& caps) {
    // Preprocessing: gcd-reduce rows, drop vacuous ones, bail out on an
    // infeasible one. Every dropped row removes a slack dimension from the
    // Hilbert search below.
    std::vector<std::pair<std::vector<Int>, Int>> reduced;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Int> row = rows[r];
        Int bound = rhs[r];
        Int g = 0;
        for (const auto& c : row) g = gcd_int(g, c);
        if (g == 0) {
            if (bound < 0) return {}; // 0 <= negative
            continue;
        }
        if (g > 1) {
            for (auto& c : row) c /= g;
            bound = fdiv(bound, g);
        }
        bool all_nonpos = true, all_nonneg = true;
        for (const auto& c : row) {
            if (c > 0) all_nonpos = false;
            if (c < 0) all_nonneg = false;
        }
        if (all_nonpos && bound >= 0) continue; // satisfied everywhere
        if (all_nonneg && bound < 0) return {}; // satisfied nowhere
        reduced.emplace_back(std::move(row), std::move(bound));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

    if (reduced.empty()) {
        NatSolutions out;
        out.bases.push_back(FinVector(static_cast<std::size_t>(dim), Int(0)));
        for (int i = 0; i < dim; ++i) {
            FinVector e(static_cast<std::size_t>(dim), Int(0));
            e[static_cast<std::size_t>(i)] = 1;
            out.periods.push_back(std::move(e));
        }
        return out;
    }

    // A y <= c  becomes  A y + s = c  with one slack per row.
    std::vector<std::vector<Int>> ext_rows;
    std::vector<Int> ext_rhs;
    const int slacks = static_cast<int>(reduced.size());
    for (std::size_t r = 0; r < reduced.size(); ++r) {
        std::vector<Int> row = reduced[r].first;
        row.resize(static_cast<std::size_t>(dim + slacks), Int(0));
        row[static_cast<std::size_t>(dim) + r] = 1;
        ext_rows.push_back(std::move(row));
        ext_rhs.push_back(reduced[r].second);
    }
    NatSolutions ext = solve_linear_eq_nat(ext_rows, ext_rhs, dim + slacks, caps);
    NatSolutions out;
    std::set<FinVector> bases, periods;
    for (const auto& b : ext.bases) bases.insert(FinVector(b.begin(), b.begin() + dim));
    for (const auto& p : ext.periods) {
        FinVector q(p.begin(), p.begin() + dim);
        if (!is_zero(q)) periods.insert(std::move(q));
    }
    out.bases.assign(bases.begin(), bases.end());
    out.periods.assign(periods.begin(), periods.end());
    return out;
}

// -- printing ----------------------------------------------------------------

std::string to_string(const Term& t) {
    std::string out;
    bool first = true;
    for (const auto& [v, c] : t.coeffs) {
        if (!first) out += " + ";
        first = false;
        if (c != 1) out += c.str() + "*";
        out += "x" + std::to_string(v);
    }
    if (t.constant != 0 || first) {
        if (!first) out += " + ";
        out += t.constant.str();
    }
    return out;
}

std::string to_string(const FormulaRef& f) {
    switch (f->kind) {
        case Formula::Kind::True:
            return "true";
        case Formula::Kind::False:
            return "false";
        case Formula::Kind::Leq:
            return "(<= " + to_string(f->term) + " 0)";
        case Formula::Kind::Eq:
            return "(= " + to_string(f->term) + " 0)";
        case Formula::Kind::Dvd:
            return "(dvd " + f->modulus.str() + " " + to_string(f->term) + ")";
        case Formula::Kind::Not:
            return "(not " + to_string(f->children[0]) + ")";
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::string out = f->kind == Formula::Kind::And ? "(and" : "(or";
            for (const auto& c : f->children) out += " " + to_string(c);
            return out + ")";
        }
        case Formula::Kind::Exists:
            return "(exists (x" + std::to_string(f->var) + ") " + to_string(f->children[0]) + ")";
        case Formula::Kind::Forall:
            return "(forall (x" + std::to_string(f->var) + ") " + to_string(f->children[0]) + ")";
    }
    return "?";
}

} // namespace jumpomega
