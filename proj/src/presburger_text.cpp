#include "jumpomega/presburger.hpp"

#include <cctype>
#include <functional>

namespace jumpomega {

namespace {

struct SexprNode {
    std::string atom;                // nonempty for leaves
    std::vector<SexprNode> children; // nonempty for lists
    bool is_atom() const { return !atom.empty(); }
};

struct SexprParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    SexprNode parse() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("formula: unexpected end of input");
        if (text[pos] == '(') {
            ++pos;
            SexprNode node;
            while (true) {
                skip_ws();
                if (pos >= text.size()) throw ParseError("formula: missing ')'");
                if (text[pos] == ')') {
                    ++pos;
                    return node;
                }
                node.children.push_back(parse());
            }
        }
        if (text[pos] == ')') throw ParseError("formula: unexpected ')'");
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        SexprNode node;
        node.atom = text.substr(start, pos - start);
        return node;
    }
};

struct FormulaBuilder {
    std::map<std::string, Var> vars;
    Var next_var = 0;

    Var var_of(const std::string& name) {
        auto it = vars.find(name);
        if (it != vars.end()) return it->second;
        while (true) {
            bool taken = false;
            for (const auto& [n, v] : vars)
                if (v == next_var) {
                    taken = true;
                    break;
                }
            if (!taken) break;
            ++next_var;
        }
        return vars.emplace(name, next_var++).first->second;
    }

    static bool is_integer(const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    }

    Term term(const SexprNode& node) {
        if (node.is_atom()) {
            if (is_integer(node.atom)) return Term::of_const(Int(node.atom));
            return Term::of_var(var_of(node.atom));
        }
        if (node.children.empty()) throw ParseError("formula: empty term list");
        const std::string& op = node.children[0].atom;
        if (op == "+") {
            Term t;
            for (std::size_t i = 1; i < node.children.size(); ++i) t = t + term(node.children[i]);
            return t;
        }
        if (op == "-") {
            if (node.children.size() == 2) return -term(node.children[1]);
            if (node.children.size() == 3) return term(node.children[1]) - term(node.children[2]);
            throw ParseError("formula: '-' takes one or two arguments");
        }
        if (op == "*") {
            if (node.children.size() != 3 || !node.children[1].is_atom() ||
                !is_integer(node.children[1].atom))
                throw ParseError("formula: '*' takes a literal coefficient and a term");
            return term(node.children[2]) * Int(node.children[1].atom);
        }
        throw ParseError("formula: unknown term operator '" + op + "'");
    }

    FormulaRef quantifier(const SexprNode& node, bool universal) {
        if (node.children.size() != 3 || node.children[1].is_atom())
            throw ParseError("formula: quantifier takes a variable list and a body");
        std::vector<Var> bound;
        for (const auto& v : node.children[1].children) {
            if (!v.is_atom()) throw ParseError("formula: bad variable name");
            bound.push_back(var_of(v.atom));
        }
        FormulaRef body = formula(node.children[2]);
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            body = universal ? f_forall(*it, body) : f_exists(*it, body);
        return body;
    }

    FormulaRef formula(const SexprNode& node) {
        if (node.is_atom()) {
            if (node.atom == "true") return f_true();
            if (node.atom == "false") return f_false();
            throw ParseError("formula: unknown atom '" + node.atom + "'");
        }
        if (node.children.empty() || !node.children[0].is_atom())
            throw ParseError("formula: expected an operator list");
        const std::string& op = node.children[0].atom;
        auto arity = [&](std::size_t n) {
            if (node.children.size() != n + 1)
                throw ParseError("formula: '" + op + "' takes " + std::to_string(n) + " arguments");
        };
        if (op == "<=") {
            arity(2);
            return f_leq(term(node.children[1]), term(node.children[2]));
        }
        if (op == "<") {
            arity(2);
            return f_leq(term(node.children[1]) + Term::of_const(1), term(node.children[2]));
        }
        if (op == ">=") {
            arity(2);
            return f_leq(term(node.children[2]), term(node.children[1]));
        }
        if (op == "=") {
            arity(2);
            return f_eq(term(node.children[1]), term(node.children[2]));
        }
        if (op == "cong") { // (cong t c m): t = c (mod m)
            arity(3);
            Term t = term(node.children[1]);
            Term c = term(node.children[2]);
            Term m = term(node.children[3]);
            if (!c.is_constant() || !m.is_constant())
                throw ParseError("formula: congruence needs literal residue and modulus");
            return f_cong(t, c.constant, m.constant);
        }
        if (op == "dvd") {
            arity(2);
            Term m = term(node.children[1]);
            if (!m.is_constant()) throw ParseError("formula: dvd needs a literal modulus");
            return f_dvd(m.constant, term(node.children[2]));
        }
        if (op == "not") {
            arity(1);
            return f_not(formula(node.children[1]));
        }
        if (op == "imp") {
            arity(2);
            return f_implies(formula(node.children[1]), formula(node.children[2]));
        }
        if (op == "and" || op == "or") {
            std::vector<FormulaRef> children;
            for (std::size_t i = 1; i < node.children.size(); ++i)
                children.push_back(formula(node.children[i]));
            return op == "and" ? f_and(std::move(children)) : f_or(std::move(children));
        }
        if (op == "exists") return quantifier(node, false);
        if (op == "forall") return quantifier(node, true);
        throw ParseError("formula: unknown operator '" + op + "'");
    }
};

} // namespace

ParsedFormula parse_formula(const std::string& text, std::map<std::string, Var> seed) {
    SexprParser parser{text};
    SexprNode root = parser.parse();
    parser.skip_ws();
    if (parser.pos != text.size()) throw ParseError("formula: trailing input");
    FormulaBuilder builder;
    builder.vars = std::move(seed);
    ParsedFormula out;
    out.formula = builder.formula(root);
    out.vars = std::move(builder.vars);
    return out;
}

} // namespace jumpomega
