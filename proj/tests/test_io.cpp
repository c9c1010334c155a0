#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "jumpomega/io.hpp"
#include "jumpomega/jumping.hpp"

using namespace jumpomega;

namespace {

const char* fig_a_json =
    R"({"alphabet":["a","b"],"states":["q0","q1"],"initial":["q0"],"accepting":["q1"],)"
    R"("transitions":[{"from":"q0","letter":"a","to":"q1"},{"from":"q1","letter":"b","to":"q0"}]})";

} // namespace

TEST_CASE("automaton JSON round trip") {
    const Nfa a = parse_automaton(fig_a_json);
    CHECK(a.num_states() == 2);
    CHECK(a.alphabet.letters() == std::vector<char>{'a', 'b'});
    CHECK(print_automaton(a) == fig_a_json);
    // printing is stable
    CHECK(print_automaton(parse_automaton(print_automaton(a))) == print_automaton(a));
}

TEST_CASE("automaton JSON validation") {
    CHECK_THROWS_AS(parse_automaton("not json"), ParseError);
    CHECK_THROWS_AS(parse_automaton("{}"), ParseError);
    CHECK_THROWS_AS(parse_automaton(R"({"alphabet":["ab"],"states":["q"],"initial":[],)"
                                    R"("accepting":[],"transitions":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_automaton(R"({"alphabet":["a"],"states":["q","q"],"initial":[],)"
                                    R"("accepting":[],"transitions":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_automaton(R"({"alphabet":["a"],"states":["q"],"initial":["x"],)"
                                    R"("accepting":[],"transitions":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_automaton(R"({"alphabet":["a"],"states":["q"],"initial":["q"],)"
                                    R"("accepting":[],"transitions":[{"from":"q","letter":"z","to":"q"}]})"),
                    ParseError);
}

TEST_CASE("semilinear JSON round trip") {
    const char* text =
        R"({"alphabet":["a","b"],"components":[{"base":{"a":1,"b":0},"periods":[{"a":1,"b":1}]}]})";
    Alphabet sigma("x");
    const SemilinearSet s = parse_semilinear(text, &sigma);
    CHECK(sigma == Alphabet("ab"));
    CHECK(s.components().size() == 1);
    CHECK(print_semilinear(s, sigma) == text);
}

TEST_CASE("masked JSON round trip through the library") {
    const BuchiAutomaton a{parse_automaton(fig_a_json)};
    const MaskedSemilinearSet m = jumping_parikh(a);
    const std::string text = print_masked(m);
    const MaskedSemilinearSet back = parse_masked(text);
    CHECK(masked_equivalent(m, back));
    CHECK(print_masked(canonicalize(back)) == text);
    CHECK(text.find("\"inf\"") != std::string::npos);
}

TEST_CASE("masked JSON validation") {
    CHECK_THROWS_AS(parse_masked(R"({"alphabet":["a"],"components":[{"mask":{"a":0},)"
                                 R"("set":{"components":[]}}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_masked(R"({"alphabet":["a"],"components":[{"mask":{"a":2},)"
                                 R"("set":{"components":[]}}]})"),
                    ParseError);
}

TEST_CASE("DOT export shape") {
    const Nfa a = parse_automaton(fig_a_json);
    const std::string dot = export_dot(a);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"q1\" [shape=doublecircle]") != std::string::npos);
    CHECK(dot.find("\"q0\" [shape=circle]") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);
}
