#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "jumpomega/jumping.hpp"

using namespace jumpomega;

namespace {

FinVector vec(std::vector<long long> entries) {
    FinVector v;
    for (long long e : entries) v.push_back(e);
    return v;
}

Mask mask_of(std::vector<int> bits) {
    std::vector<bool> inf;
    for (int b : bits) inf.push_back(b != 0);
    return Mask(std::move(inf));
}

Nfa nfa_for_language(const Alphabet& sigma, const std::vector<std::string>& words) {
    Nfa out(sigma);
    out.add_state("r");
    out.mark_initial(0);
    for (const auto& w : words) {
        int cur = 0;
        for (char c : w) {
            int next = out.add_state("q" + std::to_string(out.num_states()));
            out.add_transition(cur, c, next);
            cur = next;
        }
        out.mark_accepting(cur);
    }
    return out;
}

} // namespace

TEST_CASE("compute_mask_set on loop languages") {
    // (ba)*: only the mask with both letters infinite
    const auto pairs = decompose_omega(corpus::two_state_ab());
    const std::set<Mask> masks = compute_mask_set(pairs[0].second);
    CHECK(masks == std::set<Mask>{mask_of({1, 1})});

    // {eps}: no realizable mask
    Nfa eps{Alphabet("ab")};
    eps.add_state("q0");
    eps.mark_initial(0);
    eps.mark_accepting(0);
    CHECK(compute_mask_set(eps).empty());

    // c* at the accepting loop of the balanced automaton
    const auto f3 = decompose_omega(corpus::ab_balanced_c());
    CHECK(compute_mask_set(f3[0].second) == std::set<Mask>{mask_of({0, 0, 1})});

    // a* + b*: every mask is realizable (different words may cover
    // different letters of Gamma)
    Nfa choice = nfa_union(nfa_star(nfa_for_language(Alphabet("ab"), {"a"})),
                           nfa_star(nfa_for_language(Alphabet("ab"), {"b"})));
    const auto masks2 = compute_mask_set(choice);
    CHECK(masks2 == std::set<Mask>{mask_of({1, 0}), mask_of({0, 1}), mask_of({1, 1})});

    // (ab)* + c c*: {a,b}, {c}, {a,b,c} but nothing separating a from b
    Nfa mixed = nfa_union(nfa_star(nfa_for_language(Alphabet("abc"), {"ab"})),
                          nfa_concat(nfa_for_language(Alphabet("abc"), {"c"}),
                                     nfa_star(nfa_for_language(Alphabet("abc"), {"c"}))));
    CHECK(compute_mask_set(mixed) ==
          std::set<Mask>{mask_of({1, 1, 0}), mask_of({0, 0, 1}), mask_of({1, 1, 1})});
}

TEST_CASE("jumping_parikh of the (ab)^omega loop") {
    const MaskedSemilinearSet m = jumping_parikh(corpus::two_state_ab());
    REQUIRE(m.parts().size() == 1);
    const auto& [mask, set] = *m.parts().begin();
    CHECK(mask == mask_of({1, 1}));
    // canonically all of N^2: Lin(0, {e_a, e_b})
    CHECK(sl_equivalent(set, SemilinearSet::full(2)));
    CHECK(m.canonical());
    CHECK(check_canonical_form(m));
}

TEST_CASE("jumping_parikh of the balanced automaton") {
    const MaskedSemilinearSet m = jumping_parikh(corpus::ab_balanced_c());
    REQUIRE(m.parts().size() == 1);
    const auto& [mask, set] = *m.parts().begin();
    CHECK(mask == mask_of({0, 0, 1}));
    // the finite parts are the balanced vectors (n, n, k)
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int c = 0; c <= 3; ++c)
                CHECK(sl_membership(vec({a, b, c}), set) == (a == b));
}

TEST_CASE("jumping_parikh of a single self-loop") {
    BuchiAutomaton a{Alphabet("a")};
    a.add_state("q0");
    a.mark_initial(0);
    a.mark_accepting(0);
    a.add_transition(0, 'a', 0);
    const MaskedSemilinearSet m = jumping_parikh(a);
    REQUIRE(m.parts().size() == 1);
    CHECK(m.parts().begin()->first == mask_of({1}));
    CHECK(sl_membership(vec({0}), m.parts().begin()->second));
}

TEST_CASE("masked_to_dba on the canonization example") {
    MaskedSemilinearSet m(Alphabet("abcd"));
    m.set_part(mask_of({0, 0, 1, 1}),
               SemilinearSet(4, {{vec({1, 0, 9, 4}), {vec({1, 2, 5, 7}), vec({1, 0, 1, 3})}}}));
    const BuchiAutomaton d = masked_to_dba(m);
    CHECK(d.is_deterministic());
    // the representative words are a, {abb, a} and the cd cycle
    CHECK(buchi_accepts_up(d, UpWord::parse("aabb;cd")));
    CHECK(buchi_accepts_up(d, UpWord::parse("aa;cd")));
    CHECK(buchi_accepts_up(d, UpWord::parse("a;cd")));
    CHECK_FALSE(buchi_accepts_up(d, UpWord::parse("abab;cd")));
    CHECK_FALSE(buchi_accepts_up(d, UpWord::parse("a;dc")));
    // but the jumping language does contain the permuted word
    CHECK(jumping_member_up(d, UpWord::parse("abab;cd")));
    CHECK(jumping_member_up(d, UpWord::parse("a;dc")));
    CHECK_FALSE(jumping_member_up(d, UpWord::parse("ab;cd")));
}

TEST_CASE("masked_to_dba of the empty set rejects everything") {
    const BuchiAutomaton d = masked_to_dba(MaskedSemilinearSet(Alphabet("ab")));
    CHECK(d.is_deterministic());
    CHECK_FALSE(buchi_emptiness(d).has_value());
}

TEST_CASE("masked_to_dba of full N^2 under the double mask") {
    MaskedSemilinearSet m(Alphabet("ab"));
    m.set_part(mask_of({1, 1}), SemilinearSet::full(2));
    const BuchiAutomaton d = masked_to_dba(m);
    CHECK(d.is_deterministic());
    CHECK(buchi_accepts_up(d, UpWord::parse(";ab")));
    // jumping membership equals "infinitely many a's and b's" on samples
    for (const UpWord& w : corpus::upword_suite(Alphabet("ab"), 2, 2)) {
        bool both_infinite = w.period().find('a') != std::string::npos &&
                             w.period().find('b') != std::string::npos;
        CHECK(jumping_member_up(d, w) == both_infinite);
    }
}

TEST_CASE("jumping membership on the paper pair") {
    const BuchiAutomaton a = corpus::two_state_ab();
    CHECK(jumping_member_up(a, UpWord::parse(";ab")));
    CHECK_FALSE(jumping_member_up(a, UpWord::parse(";a")));
    CHECK(jumping_member_up(a, UpWord::parse(";aaaabbbb")));
    CHECK_FALSE(jumping_member_up(a, UpWord::parse("a;a")));
}

TEST_CASE("jumping membership on the balanced automaton") {
    const BuchiAutomaton a = corpus::ab_balanced_c();
    CHECK(jumping_member_up(a, UpWord::parse("ab;c")));
    CHECK_FALSE(jumping_member_up(a, UpWord::parse("aa;c")));
    CHECK(jumping_member_up(a, UpWord::parse("abc;c")));
    CHECK_FALSE(jumping_member_up(a, UpWord::parse("aab;c")));
}

TEST_CASE("closure: intersection succeeds where the standard product fails") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const BuchiAutomaton b = corpus::two_state_ba();
    const BuchiAutomaton standard{nfa_product_intersection(a, b)};
    CHECK_FALSE(buchi_emptiness(standard).has_value());

    const BuchiAutomaton meet = jumping_closure(ClosureKind::Intersection, a, &b);
    CHECK(meet.is_deterministic());
    CHECK(jumping_member_up(meet, UpWord::parse(";ab")));
}

TEST_CASE("closure: complement flips membership") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const BuchiAutomaton co = jumping_closure(ClosureKind::Complement, a);
    CHECK(co.is_deterministic());
    CHECK(jumping_member_up(co, UpWord::parse(";a")));
    CHECK_FALSE(jumping_member_up(co, UpWord::parse(";ab")));
}

TEST_CASE("closure: union and determinize") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const BuchiAutomaton d = jumping_closure(ClosureKind::Determinize, a);
    CHECK(d.is_deterministic());
    const MaskedSemilinearSet ma = jumping_parikh(a);
    const MaskedSemilinearSet md = jumping_parikh(d);
    CHECK(masked_equivalent(ma, md));

    BuchiAutomaton only_a{Alphabet("ab")};
    only_a.add_state("q0");
    only_a.mark_initial(0);
    only_a.mark_accepting(0);
    only_a.add_transition(0, 'a', 0);
    const BuchiAutomaton u = jumping_closure(ClosureKind::Union, a, &only_a);
    CHECK(jumping_member_up(u, UpWord::parse(";ab")));
    CHECK(jumping_member_up(u, UpWord::parse(";a")));
    CHECK_FALSE(jumping_member_up(u, UpWord::parse(";b")));
}

TEST_CASE("closure correctness pointwise on the word suite") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const BuchiAutomaton b = corpus::window_witness();
    const BuchiAutomaton meet = jumping_closure(ClosureKind::Intersection, a, &b);
    const BuchiAutomaton join = jumping_closure(ClosureKind::Union, a, &b);
    const BuchiAutomaton co_a = jumping_closure(ClosureKind::Complement, a);

    const MaskedSemilinearSet ma = jumping_parikh(a);
    const MaskedSemilinearSet mb = jumping_parikh(b);
    const MaskedSemilinearSet m_meet = jumping_parikh(meet);
    const MaskedSemilinearSet m_join = jumping_parikh(join);
    const MaskedSemilinearSet m_co = jumping_parikh(co_a);

    for (const UpWord& w : corpus::upword_suite(Alphabet("ab"), 3, 3)) {
        const ExtVector x = psi_upword(w, Alphabet("ab"));
        const bool in_a = masked_membership(x, ma);
        const bool in_b = masked_membership(x, mb);
        CHECK(masked_membership(x, m_meet) == (in_a && in_b));
        CHECK(masked_membership(x, m_join) == (in_a || in_b));
        CHECK(masked_membership(x, m_co) == !in_a);
    }
}

TEST_CASE("decisions on the paper pair") {
    const BuchiAutomaton a = corpus::two_state_ab();
    const BuchiAutomaton b = corpus::two_state_ba();
    CHECK(jumping_decide(DecisionKind::Equivalence, a, &b));
    CHECK_FALSE(jumping_decide(DecisionKind::Empty, a));

    BuchiAutomaton dead = a;
    dead.accepting.clear();
    CHECK(jumping_decide(DecisionKind::Empty, dead));

    CHECK(jumping_decide(DecisionKind::Universality, universal_automaton(Alphabet("ab"))));
    CHECK_FALSE(jumping_decide(DecisionKind::Universality, a));

    const BuchiAutomaton co = jumping_closure(ClosureKind::Complement, a);
    CHECK_FALSE(jumping_decide(DecisionKind::Containment, a, &co));
    CHECK(jumping_decide(DecisionKind::Containment, a, &a));
}

TEST_CASE("round trip: set -> automaton -> set") {
    std::vector<MaskedSemilinearSet> corpus_sets;
    {
        MaskedSemilinearSet m(Alphabet("ab"));
        m.set_part(mask_of({0, 1}), SemilinearSet(2, {{vec({2, 0}), {vec({1, 0})}}}));
        corpus_sets.push_back(m);
    }
    {
        MaskedSemilinearSet m(Alphabet("ab"));
        m.set_part(mask_of({1, 1}), SemilinearSet(2, {{vec({0, 0}), {vec({1, 1})}}}));
        m.set_part(mask_of({1, 0}), SemilinearSet(2, {{vec({0, 3}), {}}}));
        corpus_sets.push_back(m);
    }
    {
        MaskedSemilinearSet m(Alphabet("abc"));
        m.set_part(mask_of({0, 0, 1}), SemilinearSet(3, {{vec({1, 1, 0}), {vec({1, 1, 0})}}}));
        corpus_sets.push_back(m);
    }
    for (const auto& m : corpus_sets) {
        const BuchiAutomaton d = masked_to_dba(m);
        CHECK(d.is_deterministic());
        const MaskedSemilinearSet back = jumping_parikh(d);
        CHECK(masked_equivalent(back, canonicalize(m)));
    }
}

TEST_CASE("round trip: automaton -> set -> automaton on words") {
    for (const BuchiAutomaton& a : {corpus::two_state_ab(), corpus::window_witness()}) {
        const BuchiAutomaton d = masked_to_dba(jumping_parikh(a));
        const MaskedSemilinearSet ma = jumping_parikh(a);
        const MaskedSemilinearSet md = jumping_parikh(d);
        for (const UpWord& w : corpus::upword_suite(a.alphabet, 3, 3)) {
            const ExtVector x = psi_upword(w, a.alphabet);
            CHECK(masked_membership(x, ma) == masked_membership(x, md));
        }
    }
}

TEST_CASE("permutation invariance of jumping membership") {
    const BuchiAutomaton a = corpus::ab_balanced_c();
    const MaskedSemilinearSet m = jumping_parikh(a);
    // words with equal Parikh images agree
    const char* pairs[][2] = {
        {"ab;c", "ba;c"}, {"aabb;c", "abab;c"}, {"aabb;c", "baba;c"}, {"abc;c", "cab;c"}};
    for (const auto& [left, right] : pairs) {
        const ExtVector x = psi_upword(UpWord::parse(left), a.alphabet);
        const ExtVector y = psi_upword(UpWord::parse(right), a.alphabet);
        CHECK(x == y);
        CHECK(masked_membership(x, m) == masked_membership(y, m));
    }
}
