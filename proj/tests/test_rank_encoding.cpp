#include "doctest.h"
#include "oracles.hpp"
#include "permclass/rank_encoding.hpp"

using namespace permclass;

namespace {

PeriodicPerm oscillation() { return PeriodicPerm({2, 4, 1, 6, 3}, 2, 2); }
PeriodicPerm twin() { return PeriodicPerm({2, 3, 5, 1, 7, 8, 4, 10, 6, 12, 13, 9, 15, 11}, 5, 5); }
const FiniteBasisClass kIncreasing({Perm{2, 1}});

}  // namespace

TEST_CASE("encode") {
    CHECK(encode(Perm{1, 2, 3, 4}) == RankWord{1, 1, 1, 1});
    CHECK(encode(Perm{4, 3, 2, 1}) == RankWord{1, 2, 3, 4});
    CHECK(encode(Perm{3, 1, 4, 2}) == RankWord{1, 2, 1, 3});
    CHECK(encode(Perm{}).empty());
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& g : all_perms(n)) CHECK(encode(g) == oracle::rank_word(std::vector<int>(g.begin(), g.end())));
}

TEST_CASE("decode") {
    CHECK(decode({1, 1, 1}) == Perm{1, 2, 3});
    CHECK(decode({1, 2, 1, 3}) == Perm{3, 1, 4, 2});
    CHECK(decode({1, 2}) == Perm{2, 1});
    CHECK_THROWS_AS(decode({2}), InvalidInput);
    CHECK_THROWS_AS(decode({1, 0}), InvalidInput);
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& g : all_perms(n)) CHECK(decode(encode(g)) == g);
}

TEST_CASE("prefix property") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : all_perms(n)) {
            const auto w = encode(g);
            for (std::size_t k = 0; k <= n; ++k) {
                const std::vector<int> head(g.begin(), g.begin() + static_cast<long>(k));
                CHECK(encode(flatten(head)) == RankWord(w.begin(), w.begin() + static_cast<long>(k)));
            }
        }
}

TEST_CASE("encode_class") {
    CHECK(encode_class(ClassSource(kIncreasing), 3) == std::vector<RankWord>{{}, {1}, {1, 1}, {1, 1, 1}});
    const auto osc = encode_class(ClassSource(oscillation()), 3);
    CHECK(osc.size() == 1 + 1 + 2 + 5);
    // Prefix closed.
    for (const auto& w : osc) {
        if (w.empty()) continue;
        const RankWord parent(w.begin(), w.end() - 1);
        CHECK(std::binary_search(osc.begin(), osc.end(), parent));
    }
    const auto tw = encode_class(ClassSource(twin()), 4);
    CHECK_FALSE(std::binary_search(tw.begin(), tw.end(), RankWord{1, 2, 3, 4}));
    CHECK(std::binary_search(tw.begin(), tw.end(), RankWord{1, 2}));
}

TEST_CASE("alphabet bounds") {
    const auto inc = alphabet_bound(ClassSource(kIncreasing), 6);
    CHECK(inc.m == 1);
    CHECK(inc.stabilized);
    CHECK(inc.theoretical == std::size_t{4});
    const auto osc = alphabet_bound(ClassSource(oscillation()), 8);
    CHECK(osc.m == 3);
    CHECK(osc.stabilized);
    CHECK_FALSE(osc.theoretical.has_value());
    const auto full = alphabet_bound(ClassSource(FiniteBasisClass()), 6);
    CHECK(full.m == 6);
    CHECK_FALSE(full.stabilized);
}

TEST_CASE("automaton inference") {
    const Dfa inc = infer_dfa(ClassSource(kIncreasing), 4);
    CHECK(inc.num_states() == 2);
    CHECK(inc.alphabet == 1);
    CHECK(inc.delta[inc.start][0] == inc.start);
    CHECK(inc.accepts({1, 1, 1}));
    CHECK(count_words(inc, 9) == 1);

    const Dfa osc = infer_dfa(ClassSource(oscillation()), 6);
    const auto levels = sub_pattern_levels(oscillation(), 9).levels;
    for (std::size_t n = 0; n <= 9; ++n) CHECK(count_words(osc, n) == levels[n].size());
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& g : levels[n]) CHECK(osc.accepts(encode(g)));
    CHECK(isomorphic(osc, infer_dfa(ClassSource(oscillation()), 7)));

    CHECK_THROWS_AS(infer_dfa(ClassSource(FiniteBasisClass()), 6), InvalidInput);
    // Alphabet 3 needs train_len >= 5.
    CHECK_THROWS_AS(infer_dfa(ClassSource(oscillation()), 4), InvalidInput);
    CHECK_THROWS_AS(infer_dfa(ClassSource(FiniteBasisClass({Perm{2, 3, 1}, Perm{3, 1, 2}})), 8), InvalidInput);
}

TEST_CASE("inference rejects samples that are not prefix-closed") {
    CHECK_THROWS_AS(infer_dfa_from_sample({{}, {1, 1}}, 2, 1), InvalidInput);
    // {ε, 1, 11, 12, 111}: too short to pin the language down at depth 3.
    CHECK_THROWS_AS(infer_dfa_from_sample({{}, {1}, {1, 1}, {1, 2}, {1, 1, 1}}, 3, 2), InferenceUnstable);
}

TEST_CASE("word counts and generating functions") {
    Dfa dead_only;
    dead_only.alphabet = 1;
    dead_only.delta = {{0}};
    CHECK(count_words(dead_only, 1) == 0);
    CHECK(count_words(dead_only, 0) == 0);
    CHECK(rational_gf(dead_only).num.is_zero());

    const GenFun inc = rational_gf(infer_dfa(ClassSource(kIncreasing), 4));
    CHECK(inc.num == Poly(1));
    CHECK(inc.den == Poly(1) - Poly::x());

    const Dfa osc = infer_dfa(ClassSource(oscillation()), 6);
    const GenFun g = rational_gf(osc);
    CHECK(g.str() == "(1 - x) / (1 - 2*x - x^3)");
    const auto s = g.series(16);
    for (std::size_t n = 0; n < 16; ++n) CHECK(s[n] == count_words(osc, n));

    // Hand-built automaton for words over {1,2} without "22".
    Dfa no22;
    no22.alphabet = 2;
    no22.start = 0;
    no22.dead = 2;
    no22.delta = {{0, 1}, {0, 2}, {2, 2}};
    const GenFun fib = rational_gf(no22);
    CHECK(fib.series(8) == std::vector<BigInt>{1, 2, 3, 5, 8, 13, 21, 34});
}

TEST_CASE("canonical form") {
    Dfa a;
    a.alphabet = 1;
    a.start = 1;
    a.dead = 0;
    a.delta = {{0}, {2}, {1}};  // two equivalent live states
    const Dfa c = canonical_form(a);
    CHECK(c.num_states() == 2);
    CHECK(c.start == 0);
    CHECK(c.dead == 1);
}

TEST_CASE("periodic rank words and value recovery") {
    const auto w = encode_periodic(oscillation());
    validate(w);
    CHECK(w.period == 2);
    const auto letters = encode(std::span<const int>(oscillation().prefix(80)));
    for (std::size_t j = w.start; j + 2 <= 80; ++j) CHECK(letters[j - 1] == letters[j + 1]);
    for (std::size_t j = 1; j <= 60; ++j) CHECK(recover_values(w, j) == oscillation().term(j));

    const auto t = encode_periodic(twin());
    CHECK(5 % t.period == 0);
    for (std::size_t j = 1; j <= 60; ++j) CHECK(recover_values(t, j) == twin().term(j));

    const PeriodicRankWord identity{{1}, 1, 1};
    for (std::size_t j = 1; j <= 10; ++j) CHECK(recover_values(identity, j) == static_cast<long long>(j));

    CHECK_THROWS_AS(validate(PeriodicRankWord{{2}, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(validate(PeriodicRankWord{{1, 1}, 2, 2}), InvalidInput);
    CHECK_THROWS_AS(recover_values(identity, 0), InvalidInput);
    // 1 2 3 3 3 ...: every later term lies below the first one, so the
    // count of smaller later terms never settles.
    CHECK_THROWS_AS(recover_values(PeriodicRankWord{{1, 2, 3}, 3, 1}, 1, 50), HorizonError);
}
