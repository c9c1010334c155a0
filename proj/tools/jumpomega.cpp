// jumpomega -- command-line front end: parse automata and set files, run
// the constructions and decision procedures, emit JSON or DOT.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumpomega/io.hpp"
#include "jumpomega/jumping.hpp"
#include "jumpomega/oracle.hpp"
#include "jumpomega/windows.hpp"

namespace {

using namespace jumpomega;

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_format = 2;
constexpr int exit_cap = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw jumpomega::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

BuchiAutomaton load_automaton(const std::string& path) {
    return BuchiAutomaton(parse_automaton(read_input(path)));
}

int decision(bool value) {
    std::cout << (value ? "true" : "false") << "\n";
    return value ? exit_true : exit_false;
}

struct Options {
    Caps caps;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jumping automata over infinite words"};
    app.require_subcommand(1);

    Options opt;
    std::uint64_t cap_value = 0;
    app.add_option("--cap", cap_value, "uniform resource cap override")
        ->envname("JUMPOMEGA_CAP");

    std::string file_a, file_b, word_text, build_kind, decide_kind, oracle_kind;
    int k = 1, kmax = 1, maxlen = 6, unroll = 0;
    bool finite_parikh = false;

    auto* parikh = app.add_subcommand("parikh", "Parikh image of the jumping language");
    parikh->add_option("file", file_a, "automaton JSON (- for stdin)")->required();
    parikh->add_flag("--finite", finite_parikh, "finite-word Parikh image instead");

    auto* canonize = app.add_subcommand("canonize", "canonical oblivious form of a masked set");
    canonize->add_option("file", file_a)->required();

    auto* member = app.add_subcommand("member", "jumping membership of an ultimately periodic word");
    member->add_option("--word", word_text, "word as u;v")->required();
    member->add_option("file", file_a)->required();

    auto* kmember = app.add_subcommand("kmember", "k-window jumping membership");
    kmember->add_option("--k", k, "window size")->required();
    kmember->add_option("--word", word_text)->required();
    kmember->add_option("file", file_a)->required();

    auto* emember = app.add_subcommand("emember", "bounded existential-window membership");
    emember->add_option("--kmax", kmax, "largest window size to try")->required();
    emember->add_option("--word", word_text)->required();
    emember->add_option("file", file_a)->required();

    auto* build = app.add_subcommand("build", "run a construction");
    build->add_option("kind", build_kind, "dba|bk|ewindow|intersect|complement|union|determinize")
        ->required();
    build->add_option("file", file_a)->required();
    build->add_option("file2", file_b, "second operand for binary kinds");
    build->add_option("--k", k, "window size for bk");

    auto* decide = app.add_subcommand("decide", "run a decision procedure");
    decide->add_option("kind", decide_kind, "empty|contains|equiv|universal")->required();
    decide->add_option("file", file_a)->required();
    decide->add_option("file2", file_b, "second operand for contains/equiv");

    auto* decompose = app.add_subcommand("decompose", "omega-regular decomposition");
    decompose->add_option("file", file_a)->required();

    auto* dot = app.add_subcommand("export-dot", "Graphviz export");
    dot->add_option("file", file_a)->required();

    auto* orc = app.add_subcommand("oracle", "brute-force baselines (debugging)");
    orc->group(""); // hidden
    orc->add_option("kind", oracle_kind, "enum-parikh|brute-kmember")->required();
    orc->add_option("file", file_a)->required();
    orc->add_option("--maxlen", maxlen);
    orc->add_option("--k", k);
    orc->add_option("--word", word_text);
    orc->add_option("--unroll", unroll);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return exit_format;
    }

    opt.caps = cap_value > 0 ? Caps::uniform(cap_value) : Caps{};

    try {
        if (*parikh) {
            const BuchiAutomaton a = load_automaton(file_a);
            if (finite_parikh)
                std::cout << print_semilinear(parikh_of_nfa(a, opt.caps), a.alphabet) << "\n";
            else
                std::cout << print_masked(jumping_parikh(a, opt.caps)) << "\n";
            return exit_true;
        }
        if (*canonize) {
            std::cout << print_masked(canonicalize(parse_masked(read_input(file_a)))) << "\n";
            return exit_true;
        }
        if (*member) {
            const BuchiAutomaton a = load_automaton(file_a);
            return decision(jumping_member_up(a, UpWord::parse(word_text), opt.caps));
        }
        if (*kmember) {
            const BuchiAutomaton a = load_automaton(file_a);
            return decision(kwindow_member_up(a, k, UpWord::parse(word_text), opt.caps));
        }
        if (*emember) {
            const BuchiAutomaton a = load_automaton(file_a);
            const EwindowResult r =
                ewindow_member_bounded(a, UpWord::parse(word_text), kmax, opt.caps);
            if (r.found()) {
                std::cout << "member-at(" << *r.witness_k << ")\n";
                return exit_true;
            }
            std::cout << "not-found-up-to(" << r.kmax << ")\n";
            return exit_false;
        }
        if (*build) {
            const auto binary = [&](ClosureKind kind) {
                if (file_b.empty())
                    throw jumpomega::ParseError("build " + build_kind + ": second operand required");
                const BuchiAutomaton a = load_automaton(file_a);
                const BuchiAutomaton b = load_automaton(file_b);
                return jumping_closure(kind, a, &b, opt.caps);
            };
            BuchiAutomaton result{Alphabet("a")};
            if (build_kind == "dba")
                result = masked_to_dba(parse_masked(read_input(file_a)), opt.caps);
            else if (build_kind == "bk")
                result = kwindow_construct(load_automaton(file_a), k, opt.caps);
            else if (build_kind == "ewindow")
                result = ewindow_construct(load_automaton(file_a), opt.caps);
            else if (build_kind == "intersect")
                result = binary(ClosureKind::Intersection);
            else if (build_kind == "union")
                result = binary(ClosureKind::Union);
            else if (build_kind == "complement")
                result = jumping_closure(ClosureKind::Complement, load_automaton(file_a), nullptr,
                                         opt.caps);
            else if (build_kind == "determinize")
                result = jumping_closure(ClosureKind::Determinize, load_automaton(file_a), nullptr,
                                         opt.caps);
            else
                throw jumpomega::ParseError("build: unknown kind '" + build_kind + "'");
            std::cout << print_automaton(result) << "\n";
            return exit_true;
        }
        if (*decide) {
            const BuchiAutomaton a = load_automaton(file_a);
            if (decide_kind == "empty")
                return decision(jumping_decide(DecisionKind::Empty, a, nullptr, opt.caps));
            if (decide_kind == "universal")
                return decision(jumping_decide(DecisionKind::Universality, a, nullptr, opt.caps));
            if (decide_kind == "contains" || decide_kind == "equiv") {
                if (file_b.empty())
                    throw jumpomega::ParseError("decide " + decide_kind + ": second operand required");
                const BuchiAutomaton b = load_automaton(file_b);
                const DecisionKind kind = decide_kind == "contains" ? DecisionKind::Containment
                                                                    : DecisionKind::Equivalence;
                return decision(jumping_decide(kind, a, &b, opt.caps));
            }
            throw jumpomega::ParseError("decide: unknown kind '" + decide_kind + "'");
        }
        if (*decompose) {
            const BuchiAutomaton a = load_automaton(file_a);
            nlohmann::ordered_json out = nlohmann::ordered_json::array();
            for (const auto& [s, t] : decompose_omega(a)) {
                nlohmann::ordered_json pair;
                pair["s"] = nlohmann::ordered_json::parse(print_automaton(s));
                pair["t"] = nlohmann::ordered_json::parse(print_automaton(t));
                out.push_back(std::move(pair));
            }
            std::cout << out.dump() << "\n";
            return exit_true;
        }
        if (*dot) {
            std::cout << export_dot(parse_automaton(read_input(file_a)));
            return exit_true;
        }
        if (*orc) {
            if (oracle_kind == "enum-parikh") {
                const BuchiAutomaton a = load_automaton(file_a);
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto& v : oracle::enum_parikh_language(a, maxlen)) {
                    nlohmann::ordered_json entry = nlohmann::ordered_json::object();
                    for (int i = 0; i < a.alphabet.size(); ++i)
                        entry[std::string(1, a.alphabet.letter(i))] =
                            to_longlong(v[static_cast<std::size_t>(i)], "oracle vector");
                    out.push_back(std::move(entry));
                }
                std::cout << out.dump() << "\n";
                return exit_true;
            }
            if (oracle_kind == "brute-kmember") {
                const BuchiAutomaton a = load_automaton(file_a);
                const UpWord w = UpWord::parse(word_text);
                int n = unroll;
                if (n == 0)
                    n = a.num_states() *
                        static_cast<int>(std::lcm<long long>(k, static_cast<long long>(w.period().size())));
                return decision(oracle::brute_window_member(a, k, w, n, opt.caps));
            }
            throw jumpomega::ParseError("oracle: unknown kind '" + oracle_kind + "'");
        }
    } catch (const ResourceError& e) {
        std::cerr << "error[resource-cap] " << e.what() << "\n";
        return exit_cap;
    } catch (const jumpomega::ParseError& e) {
        std::cerr << "error[format] " << e.what() << "\n";
        return exit_format;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[input] " << e.what() << "\n";
        return exit_format;
    }
    return exit_format;
}
