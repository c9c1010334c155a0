// presburger.hpp -- linear arithmetic over the naturals: terms, formulas,
// Cooper quantifier elimination, sentence decision, Hilbert bases
#ifndef JUMPOMEGA_PRESBURGER_HPP
#define JUMPOMEGA_PRESBURGER_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "jumpomega/base.hpp"

namespace jumpomega {

using Var = int;

/// Vector over the naturals, one entry per dimension/letter.
using FinVector = std::vector<Int>;

// Linear term: constant + sum of coeff * var. Coefficient map holds
// nonzero entries only.
class Term {
public:
    Int constant{};
    std::map<Var, Int> coeffs;

    static Term of_const(Int c);
    static Term of_var(Var v);

    Int coeff(Var v) const;
    bool is_constant() const { return coeffs.empty(); }
    bool mentions(Var v) const { return coeffs.count(v) > 0; }

    Term operator+(const Term& o) const;
    Term operator-(const Term& o) const;
    Term operator-() const;
    Term operator*(const Int& k) const;

    /// Replaces v by the given term.
    Term substituted(Var v, const Term& t) const;

    /// Evaluates under a (total) assignment.
    Int eval(const std::map<Var, Int>& assignment) const;

    int compare(const Term& o) const;
    bool operator==(const Term& o) const { return compare(o) == 0; }
};

struct Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Formula tree. Atoms are term <= 0, term = 0 and m | term; negation,
// conjunction, disjunction and quantifiers over N-valued variables.
struct Formula {
    enum class Kind { True, False, Leq, Eq, Dvd, Not, And, Or, Exists, Forall };

    Kind kind;
    Term term;                        // Leq / Eq / Dvd payload
    Int modulus;                      // Dvd only
    std::vector<FormulaRef> children; // Not / And / Or / quantifiers
    Var var = -1;                     // quantifiers
};

FormulaRef f_true();
FormulaRef f_false();
FormulaRef f_bool(bool b);
FormulaRef f_leq(Term t);                       // t <= 0
FormulaRef f_leq(const Term& lhs, const Term& rhs);
FormulaRef f_eq(Term t);                        // t = 0
FormulaRef f_eq(const Term& lhs, const Term& rhs);
FormulaRef f_dvd(Int m, Term t);                // m | t
FormulaRef f_cong(const Term& t, const Int& c, const Int& m); // t = c (mod m)
FormulaRef f_not(FormulaRef f);
FormulaRef f_and(std::vector<FormulaRef> children);
FormulaRef f_or(std::vector<FormulaRef> children);
FormulaRef f_implies(FormulaRef lhs, FormulaRef rhs);
FormulaRef f_exists(Var v, FormulaRef body);
FormulaRef f_forall(Var v, FormulaRef body);

std::set<Var> free_vars(const FormulaRef& f);
bool is_quantifier_free(const FormulaRef& f);

int formula_compare(const FormulaRef& a, const FormulaRef& b);

/// Bottom-up constant folding and boolean normalization.
FormulaRef simplify(const FormulaRef& f);

/// Negation normal form; Not survives only directly above Dvd atoms.
FormulaRef nnf(const FormulaRef& f);

/// Evaluates a quantifier-free formula under a total assignment.
bool eval_qf(const FormulaRef& f, const std::map<Var, Int>& assignment);

/// Quantifier elimination. The result is quantifier-free and equivalent
/// over natural-number assignments to the free variables.
FormulaRef cooper_eliminate(const FormulaRef& f, const Caps& caps = {});

/// Truth value of a sentence over the naturals.
bool decide_sentence(const FormulaRef& f, const Caps& caps = {});

/// DNF as lists of literals (atoms or negated Dvd atoms). Input must be
/// quantifier-free. Subject to the dnf_atoms budget.
std::vector<std::vector<FormulaRef>> dnf(const FormulaRef& f, const Caps& caps = {});

std::string to_string(const FormulaRef& f);
std::string to_string(const Term& t);

// Homogeneous linear Diophantine system A x = 0, solutions in N^dim.
struct HomSystem {
    int dim = 1;
    std::vector<std::vector<Int>> rows; // each of length dim

    HomSystem() = default;
    HomSystem(int d, std::vector<std::vector<Int>> r) : dim(d), rows(std::move(r)) {}
};

/// The finite set of <=-minimal nonzero solutions (Contejean-Devie
/// breadth-first search with dominance pruning). Sorted lexicographically.
std::vector<FinVector> hilbert_basis(const HomSystem& sys, const Caps& caps = {});

// Minimal solutions of A y = c over N^dim (bases) together with the
// Hilbert basis of the homogeneous part (periods): every solution is
// a base plus an N-combination of periods.
struct NatSolutions {
    std::vector<FinVector> bases;
    std::vector<FinVector> periods;
};
NatSolutions solve_linear_eq_nat(const std::vector<std::vector<Int>>& rows,
                                 const std::vector<Int>& rhs, int dim,
                                 const Caps& caps = {});
/// Same for A y <= c (slack-variable reduction).
NatSolutions solve_linear_ineq_nat(const std::vector<std::vector<Int>>& rows,
                                   const std::vector<Int>& rhs, int dim,
                                   const Caps& caps = {});

// -- debug text syntax (s-expressions), used by test fixtures -----------

struct ParsedFormula {
    FormulaRef formula;
    std::map<std::string, Var> vars;
};

/// Parses e.g. `(forall (x y) (= (+ x y) (+ y x)))`. Seeded names keep
/// their ids; new names get the smallest unused id.
ParsedFormula parse_formula(const std::string& text, std::map<std::string, Var> seed = {});

} // namespace jumpomega

#endif
