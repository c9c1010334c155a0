#include "jumpomega/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace jumpomega {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

Alphabet parse_alphabet(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": alphabet must be a nonempty array");
    std::string letters;
    for (const auto& entry : j) {
        if (!entry.is_string() || entry.get<std::string>().size() != 1)
            throw ParseError(std::string(what) + ": letters must be single-character strings");
        letters += entry.get<std::string>();
    }
    try {
        return Alphabet(letters);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

ordered_json alphabet_json(const Alphabet& sigma) {
    ordered_json out = ordered_json::array();
    for (char c : sigma.letters()) out.push_back(std::string(1, c));
    return out;
}

FinVector parse_letter_map(const json& j, const Alphabet& sigma, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a letter-count object");
    FinVector v = zero_vector(sigma.size());
    for (const auto& [key, value] : j.items()) {
        if (key.size() != 1 || !sigma.contains(key[0]))
            throw ParseError(std::string(what) + ": unknown letter '" + key + "'");
        if (!value.is_number_integer() || value.get<long long>() < 0)
            throw ParseError(std::string(what) + ": counts must be nonnegative integers");
        v[static_cast<std::size_t>(sigma.index(key[0]))] = value.get<long long>();
    }
    return v;
}

ordered_json letter_map_json(const FinVector& v, const Alphabet& sigma) {
    ordered_json out = ordered_json::object();
    for (int i = 0; i < sigma.size(); ++i)
        out[std::string(1, sigma.letter(i))] =
            to_longlong(v[static_cast<std::size_t>(i)], "semilinear entry");
    return out;
}

} // namespace

Nfa parse_automaton(const std::string& json_text) {
    const json j = parse_json(json_text, "automaton");
    if (!j.is_object()) throw ParseError("automaton: expected a JSON object");
    for (const char* key : {"alphabet", "states", "initial", "accepting", "transitions"})
        if (!j.contains(key)) throw ParseError(std::string("automaton: missing field '") + key + "'");

    Nfa a(parse_alphabet(j["alphabet"], "automaton"));
    std::map<std::string, int> index;
    if (!j["states"].is_array() || j["states"].empty())
        throw ParseError("automaton: states must be a nonempty array");
    for (const auto& s : j["states"]) {
        if (!s.is_string()) throw ParseError("automaton: state names must be strings");
        const std::string name = s.get<std::string>();
        if (index.count(name)) throw ParseError("automaton: duplicate state '" + name + "'");
        index[name] = a.add_state(name);
    }
    auto state_of = [&](const json& s, const char* field) {
        if (!s.is_string() || !index.count(s.get<std::string>()))
            throw ParseError(std::string("automaton: unknown state in '") + field + "'");
        return index.at(s.get<std::string>());
    };
    for (const auto& s : j["initial"]) a.mark_initial(state_of(s, "initial"));
    for (const auto& s : j["accepting"]) a.mark_accepting(state_of(s, "accepting"));
    for (const auto& t : j["transitions"]) {
        if (!t.is_object() || !t.contains("from") || !t.contains("letter") || !t.contains("to"))
            throw ParseError("automaton: transitions need from/letter/to");
        const std::string letter = t["letter"].get<std::string>();
        if (letter.size() != 1 || !a.alphabet.contains(letter[0]))
            throw ParseError("automaton: transition on unknown letter '" + letter + "'");
        a.add_transition(state_of(t["from"], "transitions"), a.alphabet.index(letter[0]),
                         state_of(t["to"], "transitions"));
    }
    return a;
}

std::string print_automaton(const Nfa& a) {
    ordered_json j;
    j["alphabet"] = alphabet_json(a.alphabet);
    ordered_json states = ordered_json::array();
    for (const auto& name : a.state_names) states.push_back(name);
    j["states"] = states;
    ordered_json initial = ordered_json::array();
    for (int q : a.initial) initial.push_back(a.state_names[static_cast<std::size_t>(q)]);
    j["initial"] = initial;
    ordered_json accepting = ordered_json::array();
    for (int q : a.accepting) accepting.push_back(a.state_names[static_cast<std::size_t>(q)]);
    j["accepting"] = accepting;
    ordered_json transitions = ordered_json::array();
    for (int q = 0; q < a.num_states(); ++q)
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                ordered_json t;
                t["from"] = a.state_names[static_cast<std::size_t>(q)];
                t["letter"] = std::string(1, a.alphabet.letter(l));
                t["to"] = a.state_names[static_cast<std::size_t>(p)];
                transitions.push_back(std::move(t));
            }
    j["transitions"] = transitions;
    return j.dump();
}

namespace {

SemilinearSet parse_semilinear_json(const json& j, const Alphabet& sigma) {
    if (!j.is_object() || !j.contains("components"))
        throw ParseError("semilinear: expected an object with 'components'");
    std::vector<LinearSet> comps;
    for (const auto& c : j["components"]) {
        if (!c.is_object() || !c.contains("base") || !c.contains("periods"))
            throw ParseError("semilinear: components need base and periods");
        LinearSet lin;
        lin.base = parse_letter_map(c["base"], sigma, "semilinear");
        for (const auto& p : c["periods"])
            lin.periods.push_back(parse_letter_map(p, sigma, "semilinear"));
        comps.push_back(std::move(lin));
    }
    return SemilinearSet(sigma.size(), std::move(comps));
}

ordered_json semilinear_json(const SemilinearSet& s, const Alphabet& sigma) {
    ordered_json j;
    j["alphabet"] = alphabet_json(sigma);
    ordered_json comps = ordered_json::array();
    for (const auto& c : s.components()) {
        ordered_json comp;
        comp["base"] = letter_map_json(c.base, sigma);
        ordered_json periods = ordered_json::array();
        for (const auto& p : c.periods) periods.push_back(letter_map_json(p, sigma));
        comp["periods"] = periods;
        comps.push_back(std::move(comp));
    }
    j["components"] = comps;
    return j;
}

} // namespace

SemilinearSet parse_semilinear(const std::string& json_text, Alphabet* alphabet_out) {
    const json j = parse_json(json_text, "semilinear");
    if (!j.is_object() || !j.contains("alphabet"))
        throw ParseError("semilinear: expected an object with 'alphabet'");
    const Alphabet sigma = parse_alphabet(j["alphabet"], "semilinear");
    if (alphabet_out != nullptr) *alphabet_out = sigma;
    return parse_semilinear_json(j, sigma);
}

std::string print_semilinear(const SemilinearSet& s, const Alphabet& sigma) {
    if (s.dim() != sigma.size())
        throw std::invalid_argument("print_semilinear: dimension mismatch");
    return semilinear_json(s, sigma).dump();
}

MaskedSemilinearSet parse_masked(const std::string& json_text) {
    const json j = parse_json(json_text, "masked");
    if (!j.is_object() || !j.contains("alphabet") || !j.contains("components"))
        throw ParseError("masked: expected an object with 'alphabet' and 'components'");
    const Alphabet sigma = parse_alphabet(j["alphabet"], "masked");
    MaskedSemilinearSet out(sigma);
    std::map<Mask, std::vector<LinearSet>> parts;
    for (const auto& c : j["components"]) {
        if (!c.is_object() || !c.contains("mask") || !c.contains("set"))
            throw ParseError("masked: components need mask and set");
        const json& mj = c["mask"];
        if (!mj.is_object()) throw ParseError("masked: mask must be an object");
        std::vector<bool> inf(static_cast<std::size_t>(sigma.size()), false);
        for (const auto& [key, value] : mj.items()) {
            if (key.size() != 1 || !sigma.contains(key[0]))
                throw ParseError("masked: unknown letter '" + key + "' in mask");
            const int i = sigma.index(key[0]);
            if (value.is_string() && value.get<std::string>() == "inf")
                inf[static_cast<std::size_t>(i)] = true;
            else if (value.is_number_integer() && value.get<long long>() == 0)
                inf[static_cast<std::size_t>(i)] = false;
            else
                throw ParseError("masked: mask entries are 0 or \"inf\"");
        }
        bool any = false;
        for (bool b : inf) any = any || b;
        if (!any) throw ParseError("masked: mask needs an \"inf\" entry");
        const json& sj = c["set"];
        if (sj.contains("alphabet") && parse_alphabet(sj["alphabet"], "masked") != sigma)
            throw ParseError("masked: inner alphabet mismatch");
        const SemilinearSet set = parse_semilinear_json(sj, sigma);
        auto& bucket = parts[Mask(inf)];
        for (const auto& comp : set.components()) bucket.push_back(comp);
    }
    for (auto& [mask, comps] : parts)
        out.set_part(mask, SemilinearSet(sigma.size(), std::move(comps)));
    return out;
}

std::string print_masked(const MaskedSemilinearSet& m) {
    const Alphabet& sigma = m.alphabet();
    ordered_json j;
    j["alphabet"] = alphabet_json(sigma);
    ordered_json comps = ordered_json::array();
    for (const auto& [mask, set] : m.parts()) {
        ordered_json entry;
        ordered_json mj = ordered_json::object();
        for (int i = 0; i < sigma.size(); ++i)
            mj[std::string(1, sigma.letter(i))] =
                mask.is_infinite(i) ? ordered_json("inf") : ordered_json(0);
        entry["mask"] = mj;
        entry["set"] = semilinear_json(set, sigma);
        comps.push_back(std::move(entry));
    }
    j["components"] = comps;
    return j.dump();
}

std::string export_dot(const Nfa& a) {
    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n";
    for (int q = 0; q < a.num_states(); ++q) {
        out << "  \"" << a.state_names[static_cast<std::size_t>(q)] << "\" [shape="
            << (a.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t i = 0; i < a.initial.size(); ++i) {
        out << "  init" << i << " [shape=point, style=invis];\n";
        out << "  init" << i << " -> \""
            << a.state_names[static_cast<std::size_t>(a.initial[i])] << "\";\n";
    }
    // group parallel edges into one label
    for (int q = 0; q < a.num_states(); ++q) {
        std::map<int, std::string> labels;
        for (int l = 0; l < a.alphabet.size(); ++l)
            for (int p : a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)]) {
                std::string& s = labels[p];
                if (!s.empty()) s += ",";
                s += a.alphabet.letter(l);
            }
        for (const auto& [p, label] : labels)
            out << "  \"" << a.state_names[static_cast<std::size_t>(q)] << "\" -> \""
                << a.state_names[static_cast<std::size_t>(p)] << "\" [label=\"" << label
                << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace jumpomega
