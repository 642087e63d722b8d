#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permclass {

/// Raised for malformed input: non-permutations, out-of-range letters,
/// inconsistent periodic data and the like.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite permutation of 1..n in one-line notation. The empty permutation
/// is allowed and acts as the identity for the direct sum.
class Perm {
public:
    Perm() = default;

    /// Validates that `values` is a rearrangement of 1..n.
    explicit Perm(std::vector<int> values);
    Perm(std::initializer_list<int> values) : Perm(std::vector<int>(values)) {}

    /// Parses "3 1 4 2", "3,1,4,2" or the compact "3142" (lengths up to 9).
    static Perm parse(std::string_view text);

    static Perm identity(std::size_t n);
    static Perm decreasing(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int operator[](std::size_t i) const { return values_[i]; }
    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// Space-separated one-line notation; "" for the empty permutation.
    std::string str() const;
    /// Compact digit form when every value is a single digit, else `str()`.
    std::string compact() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.values_ <=> b.values_; }

private:
    struct Trusted {};
    Perm(std::vector<int> values, Trusted) : values_(std::move(values)) {}
    friend Perm make_trusted(std::vector<int> values);

    std::vector<int> values_;
};

/// Builds a Perm without validation; callers guarantee the invariant.
Perm make_trusted(std::vector<int> values);

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
};

/// The permutation order isomorphic to a sequence of distinct numbers.
template <class T>
Perm flatten(std::span<const T> seq) {
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!(seq[order[i - 1]] < seq[order[i]]))
            throw InvalidInput("flatten: duplicate entry in sequence");
    }
    std::vector<int> ranks(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r + 1);
    return make_trusted(std::move(ranks));
}

inline Perm flatten(const std::vector<int>& seq) { return flatten(std::span<const int>(seq)); }
inline Perm flatten(const std::vector<double>& seq) { return flatten(std::span<const double>(seq)); }

/// Backtracking pattern matcher. The pattern is analysed once; hosts may be
/// arbitrary sequences of distinct integers (prefixes of infinite
/// permutations included).
///
/// Pattern entries are placed left to right. Entry i must land strictly
/// between the host values already chosen for its nearest pattern neighbours
/// below and above among entries 0..i-1.
class Matcher {
public:
    explicit Matcher(const Perm& pattern);

    const Perm& pattern() const noexcept { return pattern_; }

    bool occurs_in(std::span<const int> host) const;

    /// Occurrence whose first entry sits at host index `first` and/or whose
    /// last entry sits at host index `last` (0-based).
    bool occurs_in(std::span<const int> host, std::optional<std::size_t> first,
                   std::optional<std::size_t> last) const;

    /// Number of occurrences (distinct index sets), stopping at `limit`.
    std::size_t count_in(std::span<const int> host, std::size_t limit) const;

    /// Index sets of occurrences, at most `limit` of them.
    std::vector<std::vector<std::size_t>> occurrences_in(std::span<const int> host,
                                                         std::size_t limit) const;

private:
    template <class Visit>
    void search(std::span<const int> host, std::optional<std::size_t> first,
                std::optional<std::size_t> last, Visit&& visit) const;

    Perm pattern_;
    std::vector<int> lower_;  // index of nearest smaller earlier entry, or -1
    std::vector<int> upper_;  // index of nearest larger earlier entry, or -1
};

/// True iff some subsequence of `host` is order isomorphic to `pattern`.
bool involves(const Perm& host, const Perm& pattern);
bool involves(std::span<const int> host, const Perm& pattern);

Perm direct_sum(const Perm& a, const Perm& b);
Perm direct_sum(std::span<const Perm> parts);

/// Maximal decomposition into indecomposable summands. Empty for ε.
std::vector<Perm> sum_decompose(const Perm& g);

/// Rejects the empty permutation.
bool is_indecomposable(const Perm& g);

/// Flattened one-point deletions, position by position (duplicates kept).
std::vector<Perm> deletions(const Perm& g);
Perm delete_at(const Perm& g, std::size_t pos);

/// Every one-point extension of g (length |g|+1), deduplicated and sorted.
std::vector<Perm> extensions(const Perm& g);

/// Involvement-minimal permutations that involve both a and b, sorted.
std::vector<Perm> minimal_mergers(const Perm& a, const Perm& b);

/// All permutations of length n in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

/// Sorted, deduplicated copy.
std::vector<Perm> sorted_unique(std::vector<Perm> perms);

}  // namespace permclass
