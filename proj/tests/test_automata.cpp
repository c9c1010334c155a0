#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "jumpomega/nfa.hpp"
#include "jumpomega/upword.hpp"

using namespace jumpomega;

namespace {

// Language of an NFA restricted to words up to maxlen, by enumeration.
std::set<std::string> language_up_to(const Nfa& a, int maxlen) {
    std::set<std::string> out;
    for (const auto& w : corpus::words_up_to(a.alphabet, maxlen, true))
        if (nfa_accepts(a, w)) out.insert(w);
    return out;
}

Nfa nfa_for_word(const Alphabet& sigma, const std::string& word) {
    Nfa a(sigma);
    int cur = a.add_state("q0");
    a.mark_initial(cur);
    for (char c : word) {
        int next = a.add_state("q" + std::to_string(a.num_states()));
        a.add_transition(cur, c, next);
        cur = next;
    }
    a.mark_accepting(cur);
    return a;
}

Nfa even_length_nfa(const Alphabet& sigma) {
    Nfa a(sigma);
    a.add_state("e");
    a.add_state("o");
    a.mark_initial(0);
    a.mark_accepting(0);
    for (char c : sigma.letters()) {
        a.add_transition(0, c, 1);
        a.add_transition(1, c, 0);
    }
    return a;
}

} // namespace

TEST_CASE("upword normalization") {
    CHECK(UpWord("", "abab").period() == "ab");
    CHECK(UpWord("ba", "bb").prefix() == "ba");
    CHECK(UpWord("ba", "bb").period() == "b");
    // u.v^w = uv.v^w = u.vv^w after normalization
    CHECK(UpWord("a", "ba") == UpWord("aba", "ba"));
    CHECK(UpWord("a", "ba") == UpWord("a", "baba"));
    CHECK(UpWord("abb", "ab") == UpWord("ab", "ba"));
    CHECK(UpWord("", "ab") != UpWord("", "ba"));
    // idempotence
    const UpWord w("aab", "aab");
    CHECK(UpWord(w.prefix(), w.period()) == w);
}

TEST_CASE("upword parsing") {
    CHECK(UpWord::parse("ba;bb") == UpWord("ba", "bb"));
    CHECK(UpWord::parse(";ab").prefix() == "");
    CHECK_THROWS_AS(UpWord::parse("ab"), ParseError);
    CHECK_THROWS_AS(UpWord::parse("ab;"), ParseError);
    CHECK_THROWS_AS(UpWord::parse("a;b;c"), ParseError);
}

TEST_CASE("nfa_accepts on the two-state loop") {
    const Nfa a = corpus::two_state_ab(); // alpha = {q1}: language a(ba)*
    CHECK(nfa_accepts(a, "a"));
    CHECK_FALSE(nfa_accepts(a, ""));
    CHECK(nfa_accepts(a, "aba"));
    CHECK_FALSE(nfa_accepts(a, "ab"));
    CHECK_THROWS_AS(nfa_accepts(a, "ax"), std::invalid_argument);
}

TEST_CASE("star base cases") {
    const Alphabet sigma("ab");
    const Nfa star = nfa_star(nfa_for_word(sigma, "ab"));
    CHECK(nfa_accepts(star, ""));
    CHECK(nfa_accepts(star, "abab"));
    CHECK_FALSE(nfa_accepts(star, "aba"));
}

TEST_CASE("product intersection agrees with enumeration") {
    const Nfa a = corpus::two_state_ab(); // a(ba)*
    const Nfa even = even_length_nfa(a.alphabet);
    const Nfa prod = nfa_product_intersection(a, even);
    CHECK_FALSE(nfa_accepts(prod, "aba"));
    CHECK_FALSE(nfa_accepts(prod, "abab"));
    CHECK_FALSE(nfa_accepts(prod, "ab"));
    CHECK_FALSE(nfa_accepts(prod, "a"));
    for (const auto& w : corpus::words_up_to(a.alphabet, 6, true))
        CHECK(nfa_accepts(prod, w) == (nfa_accepts(a, w) && nfa_accepts(even, w)));
}

TEST_CASE("restrict-alphabet of (ab)* to {a} leaves only the empty word") {
    const Nfa star = nfa_star(nfa_for_word(Alphabet("ab"), "ab"));
    const Nfa restricted = nfa_restrict_alphabet(star, {'a'});
    CHECK(language_up_to(restricted, 5) == std::set<std::string>{""});
}

TEST_CASE("algebra agrees with brute-force enumeration") {
    const Alphabet sigma("ab");
    const Nfa w_ab = nfa_for_word(sigma, "ab");
    const Nfa w_a = nfa_for_word(sigma, "a");
    const Nfa u = nfa_union(w_ab, w_a);
    const Nfa c = nfa_concat(w_a, nfa_star(w_ab));
    for (const auto& w : corpus::words_up_to(sigma, 8, true)) {
        CHECK(nfa_accepts(u, w) == (w == "ab" || w == "a"));
        // a (ab)*
        bool expect = !w.empty() && w[0] == 'a' && (w.size() % 2 == 1);
        for (std::size_t i = 1; expect && i + 1 < w.size(); i += 2)
            expect = w[i] == 'a' && w[i + 1] == 'b';
        CHECK(nfa_accepts(c, w) == expect);
    }
}

TEST_CASE("concat handles epsilon on either side") {
    const Alphabet sigma("ab");
    const Nfa eps = nfa_star(nfa_for_word(sigma, "a")); // contains epsilon
    const Nfa w_b = nfa_for_word(sigma, "b");
    CHECK(nfa_accepts(nfa_concat(eps, w_b), "b"));
    CHECK(nfa_accepts(nfa_concat(w_b, eps), "b"));
    CHECK(nfa_accepts(nfa_concat(eps, w_b), "aab"));
    CHECK_FALSE(nfa_accepts(nfa_concat(eps, w_b), "ba"));
}

TEST_CASE("buchi_accepts_up on the paper pair") {
    const BuchiAutomaton a = corpus::two_state_ab();
    CHECK(buchi_accepts_up(a, UpWord("", "ab")));
    CHECK_FALSE(buchi_accepts_up(a, UpWord("", "ba")));
    CHECK_FALSE(buchi_accepts_up(a, UpWord("", "a")));
}

TEST_CASE("buchi_emptiness returns checkable witnesses") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const auto witness = buchi_emptiness(a);
    REQUIRE(witness.has_value());
    CHECK(buchi_accepts_up(a, *witness));
    CHECK(*witness == UpWord("", "ab"));

    BuchiAutomaton no_accepting = a;
    no_accepting.accepting.clear();
    CHECK_FALSE(buchi_emptiness(no_accepting).has_value());

    // standard product of the ab and ba loops is empty
    const BuchiAutomaton prod{
        nfa_product_intersection(corpus::two_state_ab(), corpus::two_state_ba())};
    CHECK_FALSE(buchi_emptiness(prod).has_value());
}

TEST_CASE("emptiness witnesses over the corpus") {
    for (const BuchiAutomaton& a : {corpus::two_state_ab(), corpus::two_state_ba(),
                                    corpus::ab_balanced_c(), corpus::window_witness()}) {
        const auto witness = buchi_emptiness(a);
        REQUIRE(witness.has_value());
        CHECK(buchi_accepts_up(a, *witness));
    }
}

TEST_CASE("decompose_omega shapes") {
    const auto pairs = decompose_omega(corpus::two_state_ab());
    REQUIRE(pairs.size() == 1);
    CHECK(language_up_to(pairs[0].first, 5) ==
          std::set<std::string>{"a", "aba", "ababa"}); // a(ba)*
    CHECK(language_up_to(pairs[0].second, 4) == std::set<std::string>{"", "ba", "baba"});

    BuchiAutomaton none = corpus::two_state_ab();
    none.accepting.clear();
    CHECK(decompose_omega(none).empty());

    const auto f3 = decompose_omega(corpus::ab_balanced_c());
    REQUIRE(f3.size() == 1);
    // s = (ab)*c c*, t = c*
    CHECK(nfa_accepts(f3[0].first, "c"));
    CHECK(nfa_accepts(f3[0].first, "abcc"));
    CHECK_FALSE(nfa_accepts(f3[0].first, "ab"));
    CHECK(nfa_accepts(f3[0].second, ""));
    CHECK(nfa_accepts(f3[0].second, "cc"));
    CHECK_FALSE(nfa_accepts(f3[0].second, "a"));
}

namespace {

// Bounded factorization: does w = x y1 y2 ... hold with x in L(s) and every
// y_j in L(t)? Looks for a split point p in the periodic region reachable
// via x (y)* such that some power of the rotated period pumps through t.
// An accepting run revisits its recurring state within |Q| periods, so the
// 8-period window is exhaustive for the corpus sizes used here.
bool bounded_factorization(const Nfa& s, const Nfa& t, const UpWord& w) {
    const std::size_t span = w.prefix().size() + 8 * w.period().size();
    std::string flat;
    for (std::size_t i = 0; i < span; ++i) flat.push_back(w.at(i));
    std::vector<bool> split(span + 1, false);
    for (std::size_t i = 0; i <= span; ++i) split[i] = nfa_accepts(s, flat.substr(0, i));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i <= span; ++i) {
            if (!split[i]) continue;
            for (std::size_t j = i + 1; j <= span; ++j) {
                if (split[j]) continue;
                if (nfa_accepts(t, flat.substr(i, j - i))) {
                    split[j] = true;
                    changed = true;
                }
            }
        }
    }
    for (std::size_t p = w.prefix().size(); p <= span; ++p) {
        if (!split[p]) continue;
        std::string rotated;
        for (std::size_t i = 0; i < w.period().size(); ++i) rotated.push_back(w.at(p + i));
        std::string pump;
        for (int reps = 1; reps <= 8; ++reps) {
            pump += rotated;
            if (nfa_accepts(t, pump)) return true;
        }
    }
    return false;
}

void check_decomposition_on_suite(const BuchiAutomaton& a, const std::vector<UpWord>& words) {
    const auto pairs = decompose_omega(a);
    for (const UpWord& w : words) {
        bool factorable = false;
        for (const auto& [s, t] : pairs)
            if (bounded_factorization(s, t, w)) {
                factorable = true;
                break;
            }
        CHECK(buchi_accepts_up(a, w) == factorable);
    }
}

} // namespace

TEST_CASE("decompose_omega is sound on ultimately periodic words") {
    check_decomposition_on_suite(corpus::two_state_ab(),
                                 corpus::upword_suite(Alphabet("ab"), 4, 4));
    check_decomposition_on_suite(corpus::window_witness(),
                                 corpus::upword_suite(Alphabet("ab"), 4, 4));
    std::vector<UpWord> three = corpus::upword_suite(Alphabet("abc"), 2, 2);
    for (const char* text : {"aabb;c", "aab;c", "ab;c", "abab;ccc", "abc;abc", "cc;ac"})
        three.push_back(UpWord::parse(text));
    check_decomposition_on_suite(corpus::ab_balanced_c(), three);
}

TEST_CASE("trim preserves the finite-word language") {
    Nfa a = corpus::two_state_ab();
    a.add_state("junk");
    a.add_transition(2, 'a', 2);
    const Nfa t = nfa_trim(a);
    CHECK(t.num_states() == 2);
    CHECK(language_up_to(t, 5) == language_up_to(a, 5));
}

TEST_CASE("determinize is deterministic and language-preserving") {
    const Nfa a = nfa_union(nfa_for_word(Alphabet("ab"), "ab"),
                            nfa_star(nfa_for_word(Alphabet("ab"), "aab")));
    const Nfa d = nfa_determinize(a);
    CHECK(d.is_deterministic());
    for (const auto& w : corpus::words_up_to(a.alphabet, 7, true))
        CHECK(nfa_accepts(d, w) == nfa_accepts(a, w));
}
