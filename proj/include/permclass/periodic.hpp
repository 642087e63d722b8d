#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permclass/perm.hpp"

namespace permclass {

/// A search window was too short to settle a question about an infinite
/// permutation.
class HorizonError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An ultimately periodic bijection ℕ→ℕ: π(n+P) = π(n)+P for n >= N.
///
/// The window holds π(1..W) with W >= N+P-1; entries beyond N+P-1 must agree
/// with the periodic rule. Construction checks that the induced map is a
/// bijection onto the positive integers.
class PeriodicPerm {
public:
    PeriodicPerm(std::vector<int> window, std::size_t start, std::size_t period);

    /// π(n) for n >= 1.
    long long term(std::size_t n) const;
    /// π(1..len).
    std::vector<int> prefix(std::size_t len) const;

    const std::vector<int>& window() const noexcept { return window_; }
    std::size_t start() const noexcept { return start_; }
    std::size_t period() const noexcept { return period_; }
    /// max |π(n) - n| over all n.
    std::size_t displacement() const noexcept { return displacement_; }

    /// Smallest period, then smallest start, for which π(n+P) = π(n)+P.
    std::pair<std::size_t, std::size_t> canonical_period() const;

    /// Positions j >= 1 with {π(1..j)} = {1..j}, up to and including `upto`.
    std::vector<std::size_t> component_boundaries(std::size_t upto) const;
    /// Largest component boundary, or nullopt when π has infinitely many
    /// components. A return of 0 means π is indecomposable.
    std::optional<std::size_t> last_boundary() const;

    friend bool operator==(const PeriodicPerm&, const PeriodicPerm&) = default;

private:
    std::vector<int> window_;
    std::size_t start_;
    std::size_t period_;
    std::size_t displacement_ = 0;
};

PeriodicPerm make_periodic(std::vector<int> window, std::size_t start, std::size_t period);

/// A finite initial segment of an infinite permutation. Results computed
/// from it describe the prefix only.
struct RawPrefix {
    std::vector<int> values;

    explicit RawPrefix(std::vector<int> v);
};

/// Lexicographically minimal (N, P), P first, with values[n+P] = values[n]+P
/// for every in-range n >= N. A candidate only counts when the checked
/// stretch covers at least two full periods and the second half of the
/// prefix (otherwise short tails would match trivially).
std::optional<std::pair<std::size_t, std::size_t>> check_eventual_periodicity(std::span<const int> values);

/// Patterns of a finite host, level by level (levels[k] = sorted length-k
/// patterns).
struct PatternLevels {
    std::vector<std::vector<Perm>> levels;
    std::size_t window = 0;  // host length used
    bool stabilized = false;  // agreed with one more period of window
    bool prefix_empirical = false;
};

/// Exact pattern sets of the finite sequence `host`, for lengths 0..k.
PatternLevels host_pattern_levels(std::span<const int> host, std::size_t k);

/// Initial window N + k(P + 2D) used for length-k questions.
std::size_t stabilization_window(const PeriodicPerm& p, std::size_t k);

/// Sub(π) restricted to lengths 0..k, with the window-doubling
/// stabilization check.
PatternLevels sub_pattern_levels(const PeriodicPerm& p, std::size_t k);
PatternLevels sub_pattern_levels(const RawPrefix& p, std::size_t k);

std::vector<Perm> sub_patterns(const PeriodicPerm& p, std::size_t k);
std::vector<Perm> sub_patterns(const RawPrefix& p, std::size_t k);

/// Membership of a single pattern in Sub(π), decided on stabilized windows.
bool in_sub(const PeriodicPerm& p, const Perm& g);

/// Basis elements of Sub(π) of length at most n, sorted.
std::vector<Perm> basis_up_to(const PeriodicPerm& p, std::size_t n);
std::vector<Perm> basis_from_levels(const PatternLevels& levels);

struct UVSequences {
    std::vector<std::size_t> u;  // 1-based positions
    std::vector<std::size_t> v;
};

/// U(r), V(r): π(v_i) = max{π(j) : j <= u_{i-1}} with u_0 = r, and
/// u_i = max{j : π(j) <= π(v_i)}. Rejects r in a finite sum component.
UVSequences uv_sequences(const PeriodicPerm& p, std::size_t r, std::size_t count);

/// Checks v1 < v2 < u1 < v3 < u2 < ... and π(u1) < π(v1) < π(u2) < π(v2) < ...
bool uv_interleaving_holds(const PeriodicPerm& p, const UVSequences& uv);

struct Landmarks {
    std::size_t k = 0;  // greatest start position of a C-occurrence
    std::size_t l = 0;  // greatest end position of a C-occurrence
    std::vector<std::size_t> u;
    std::vector<std::size_t> v;
    std::size_t horizon = 0;
};

/// Default horizon N + 4(b+1)(P+2D).
std::size_t default_landmark_horizon(const PeriodicPerm& p, std::size_t b);

/// Landmarks of π for the final-component set C. Returns nullopt when no
/// element of C occurs in π (the class then lies in the A(C) branch).
/// `b` defaults to the longest element of C; `horizon` to the default above.
/// Throws HorizonError when C-occurrences begin arbitrarily late or the
/// positions do not settle after two automatic horizon raises.
std::optional<Landmarks> landmarks(const PeriodicPerm& p, std::span<const Perm> C, std::size_t uv_count = 20,
                                   std::optional<std::size_t> b = std::nullopt,
                                   std::optional<std::size_t> horizon = std::nullopt);

/// σ(i): flatten of π(1..u_i).
Perm sigma(const PeriodicPerm& p, const UVSequences& uv, std::size_t i);
/// σ'(i): flatten of all terms of π not exceeding π(v_i), in position order.
Perm sigma_prime(const PeriodicPerm& p, const UVSequences& uv, std::size_t i);

/// Number of occurrences of g in π(1..window), capped at `limit`.
std::size_t occurrences_in_window(const PeriodicPerm& p, const Perm& g, std::size_t window, std::size_t limit);

}  // namespace permclass
