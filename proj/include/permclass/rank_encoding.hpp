#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "permclass/class_engine.hpp"
#include "permclass/periodic.hpp"
#include "permclass/perm.hpp"
#include "permclass/polynomial.hpp"

namespace permclass {

/// Letters e_1..e_n with 1 <= e_k <= k.
using RankWord = std::vector<int>;

/// Where class members come from: a finite basis, or Sub(π) of an infinite
/// permutation (exact for PeriodicPerm, prefix-only for RawPrefix).
using ClassSource = std::variant<FiniteBasisClass, PeriodicPerm, RawPrefix>;

/// levels[k] = sorted members of length k, k = 0..n.
std::vector<std::vector<Perm>> source_levels(const ClassSource& src, std::size_t n);

/// e_k = #{i <= k : x_i >= x_k}.
RankWord encode(const Perm& g);
RankWord encode(std::span<const int> values);

/// Inverse of encode; throws InvalidInput when some e_k is outside 1..k.
Perm decode(const RankWord& w);

/// Encodings of all members of length <= n, sorted.
std::vector<RankWord> encode_class(const ClassSource& src, std::size_t n);

struct AlphabetBound {
    int m = 0;                // largest letter over lengths <= n
    bool stabilized = false;  // m did not change from length n-1 to n
    /// 4(b-1)^2 when a finite basis length b is known.
    std::optional<std::size_t> theoretical;
};

AlphabetBound alphabet_bound(const ClassSource& src, std::size_t n);

/// Complete DFA over letters 1..m. Every state except `dead` accepts.
struct Dfa {
    std::size_t alphabet = 0;
    std::size_t start = 0;
    std::size_t dead = 0;
    /// delta[state][letter - 1]
    std::vector<std::vector<std::size_t>> delta;

    std::size_t num_states() const noexcept { return delta.size(); }
    bool accepts(const RankWord& w) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// The sample does not yet determine the language.
class InferenceUnstable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Minimal, BFS-numbered DFA with the dead state last.
Dfa canonical_form(const Dfa& d);

bool isomorphic(const Dfa& a, const Dfa& b);

/// Infers a DFA from a prefix-closed sample of words of length <= train_len
/// over letters 1..m, without the stability check.
Dfa infer_dfa_from_sample(const std::vector<RankWord>& sample, std::size_t train_len, std::size_t m);

/// DFA for E(X) inferred from members of length <= train_len. Checks that it
/// accepts exactly the sample and that inference at train_len+1 gives the
/// same automaton; throws InferenceUnstable otherwise. Throws InvalidInput
/// when the alphabet has not stabilized or train_len < m + 2.
Dfa infer_dfa(const ClassSource& src, std::size_t train_len);

/// Accepted words of length n.
BigInt count_words(const Dfa& d, std::size_t n);

/// Σ count_words(d, n) x^n, checked against count_words for
/// n <= 2·|states| + 2 before returning.
GenFun rational_gf(const Dfa& d);

/// Ultimately periodic rank word: letter(j + P) = letter(j) for j >= N;
/// window holds letters 1..W with W >= N+P-1.
struct PeriodicRankWord {
    std::vector<int> window;
    std::size_t start = 1;
    std::size_t period = 1;

    int letter(std::size_t j) const;  // j >= 1
    int max_letter() const;
};

/// Checks 1 <= e_k <= k on the window and the period shape.
void validate(const PeriodicRankWord& w);

/// E(π) in periodic form, with the smallest period and then smallest start.
PeriodicRankWord encode_periodic(const PeriodicPerm& p);

/// π(j) = l_j + r_j + 1 from the rank word alone. Throws HorizonError when
/// the count of later smaller terms is not settled within `horizon` letters.
long long recover_values(const PeriodicRankWord& e, std::size_t j, std::size_t horizon = 100000);

}  // namespace permclass
