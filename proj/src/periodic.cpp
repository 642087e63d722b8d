#include "permclass/periodic.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "permclass/parallel.hpp"

namespace permclass {

namespace {

constexpr int kMaxStabilizationRounds = 6;

using PermSet = std::unordered_set<Perm, PermHash>;

}  // namespace

// --------------------------------------------------------- PeriodicPerm

PeriodicPerm::PeriodicPerm(std::vector<int> window, std::size_t start, std::size_t period)
    : window_(std::move(window)), start_(start), period_(period) {
    if (start_ < 1) throw InvalidInput("periodic permutation: N must be at least 1");
    if (period_ < 1) throw InvalidInput("periodic permutation: P must be positive");
    if (window_.size() < start_ + period_ - 1)
        throw InvalidInput("periodic permutation: window needs at least N+P-1 = " +
                           std::to_string(start_ + period_ - 1) + " values, got " + std::to_string(window_.size()));
    for (int v : window_)
        if (v < 1) throw InvalidInput("periodic permutation: value " + std::to_string(v) + " is not positive");

    const auto P = static_cast<int>(period_);
    for (std::size_t n = start_ + period_; n <= window_.size(); ++n) {
        if (window_[n - 1] != window_[n - 1 - period_] + P)
            throw InvalidInput("periodic permutation: window value at position " + std::to_string(n) + " is " +
                               std::to_string(window_[n - 1]) + " but periodicity requires " +
                               std::to_string(window_[n - 1 - period_] + P));
    }

    // Every positive integer must be hit exactly once by the prefix values
    // π(1..N-1) and the progressions π(n) + jP, N <= n < N+P. Checking
    // 1..max+P also catches repeated or missing residues.
    const int top = *std::max_element(window_.begin(), window_.end()) + P;
    std::vector<int> hits(static_cast<std::size_t>(top) + 1, 0);
    for (std::size_t n = 1; n < start_; ++n) ++hits[window_[n - 1]];
    for (std::size_t n = start_; n < start_ + period_; ++n)
        for (int y = window_[n - 1]; y <= top; y += P) ++hits[y];
    for (int y = 1; y <= top; ++y) {
        if (hits[y] == 0)
            throw InvalidInput("periodic permutation: value " + std::to_string(y) + " is never attained");
        if (hits[y] > 1)
            throw InvalidInput("periodic permutation: value " + std::to_string(y) + " is attained more than once");
    }

    for (std::size_t n = 1; n <= window_.size(); ++n)
        displacement_ = std::max<std::size_t>(displacement_, std::llabs(window_[n - 1] - static_cast<long long>(n)));
}

PeriodicPerm make_periodic(std::vector<int> window, std::size_t start, std::size_t period) {
    return PeriodicPerm(std::move(window), start, period);
}

long long PeriodicPerm::term(std::size_t n) const {
    if (n < 1) throw InvalidInput("term: positions start at 1");
    if (n <= window_.size()) return window_[n - 1];
    const std::size_t offset = n - start_;
    const std::size_t laps = offset / period_;
    const std::size_t base = start_ + offset % period_;
    return window_[base - 1] + static_cast<long long>(laps * period_);
}

std::vector<int> PeriodicPerm::prefix(std::size_t len) const {
    std::vector<int> out(len);
    for (std::size_t n = 1; n <= len; ++n) out[n - 1] = static_cast<int>(term(n));
    return out;
}

std::pair<std::size_t, std::size_t> PeriodicPerm::canonical_period() const {
    // d(n) = π(n) - n has period P from N on; its least period divides P.
    auto d = [&](std::size_t n) { return term(n) - static_cast<long long>(n); };
    for (std::size_t q = 1; q <= period_; ++q) {
        if (period_ % q) continue;
        bool ok = true;
        for (std::size_t n = start_; n < start_ + period_ && ok; ++n) ok = d(n + q) == d(n);
        if (!ok) continue;
        std::size_t first = start_;
        while (first > 1 && d(first - 1 + q) == d(first - 1)) --first;
        return {first, q};
    }
    return {start_, period_};
}

std::vector<std::size_t> PeriodicPerm::component_boundaries(std::size_t upto) const {
    std::vector<std::size_t> out;
    long long running = 0;
    for (std::size_t j = 1; j <= upto; ++j) {
        running = std::max(running, term(j));
        if (running == static_cast<long long>(j)) out.push_back(j);
    }
    return out;
}

namespace {

// Beyond this position boundaries repeat with period P.
std::size_t boundary_settle_point(const PeriodicPerm& p) {
    long long head_max = 0;
    for (std::size_t n = 1; n < p.start(); ++n) head_max = std::max(head_max, p.term(n));
    return std::max(p.start() + p.period() - 1, static_cast<std::size_t>(head_max) + p.start() - 1);
}

}  // namespace

std::optional<std::size_t> PeriodicPerm::last_boundary() const {
    const std::size_t settle = boundary_settle_point(*this);
    const auto bounds = component_boundaries(settle + period_);
    if (!bounds.empty() && bounds.back() > settle) return std::nullopt;
    return bounds.empty() ? 0 : bounds.back();
}

RawPrefix::RawPrefix(std::vector<int> v) : values(std::move(v)) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1) throw InvalidInput("prefix: value " + std::to_string(sorted[i]) + " is not positive");
        if (i && sorted[i] == sorted[i - 1])
            throw InvalidInput("prefix: value " + std::to_string(sorted[i]) + " is duplicated");
    }
}

std::optional<std::pair<std::size_t, std::size_t>> check_eventual_periodicity(std::span<const int> values) {
    const std::size_t len = values.size();
    if (len < 4) throw InvalidInput("check_eventual_periodicity: need at least 4 values");
    for (std::size_t period = 1; 2 * period <= len; ++period) {
        std::size_t last_bad = 0;  // 1-based position of the last violation
        for (std::size_t n = 1; n + period <= len; ++n)
            if (values[n + period - 1] != values[n - 1] + static_cast<int>(period)) last_bad = n;
        const std::size_t start = last_bad + 1;
        if (start + 2 * period - 1 <= len && 2 * (start - 1) <= len) return std::make_pair(start, period);
    }
    return std::nullopt;
}

// ------------------------------------------------------------ patterns

PatternLevels host_pattern_levels(std::span<const int> host, std::size_t k) {
    PatternLevels out;
    out.window = host.size();
    out.levels.push_back({Perm{}});
    for (std::size_t len = 1; len <= k; ++len) {
        const auto& prev_level = out.levels.back();
        if (prev_level.empty() || len > host.size()) {
            out.levels.emplace_back();
            continue;
        }
        PermSet prev(prev_level.begin(), prev_level.end());
        PermSet seen;
        std::vector<Perm> candidates;
        for (const Perm& g : prev_level) {
            for (Perm& e : extensions(g)) {
                if (!seen.insert(e).second) continue;
                bool closed = true;
                for (std::size_t i = 0; i < e.size() && closed; ++i) closed = prev.count(delete_at(e, i)) > 0;
                if (closed) candidates.push_back(std::move(e));
            }
        }
        auto found = parallel_filter(candidates, [&](const Perm& cand) { return Matcher(cand).occurs_in(host); });
        out.levels.push_back(sorted_unique(std::move(found)));
    }
    return out;
}

std::size_t stabilization_window(const PeriodicPerm& p, std::size_t k) {
    const std::size_t w = p.start() + k * (p.period() + 2 * p.displacement());
    return std::max(w, p.start() + p.period() - 1);
}

PatternLevels sub_pattern_levels(const PeriodicPerm& p, std::size_t k) {
    const std::size_t base = stabilization_window(p, k);
    std::size_t appended = 0;
    PatternLevels current = host_pattern_levels(p.prefix(base), k);
    for (int round = 0; round < kMaxStabilizationRounds; ++round) {
        const std::size_t next_appended = appended == 0 ? 1 : 2 * appended;
        PatternLevels next = host_pattern_levels(p.prefix(base + next_appended * p.period()), k);
        if (next.levels == current.levels) {
            current.stabilized = true;
            return current;
        }
        current = std::move(next);
        appended = next_appended;
    }
    throw HorizonError("sub_patterns: pattern sets did not stabilize after " +
                       std::to_string(kMaxStabilizationRounds) + " window extensions");
}

PatternLevels sub_pattern_levels(const RawPrefix& p, std::size_t k) {
    PatternLevels out = host_pattern_levels(p.values, k);
    out.prefix_empirical = true;
    return out;
}

std::vector<Perm> sub_patterns(const PeriodicPerm& p, std::size_t k) { return sub_pattern_levels(p, k).levels[k]; }

std::vector<Perm> sub_patterns(const RawPrefix& p, std::size_t k) { return sub_pattern_levels(p, k).levels[k]; }

bool in_sub(const PeriodicPerm& p, const Perm& g) {
    const Matcher m(g);
    const std::size_t base = stabilization_window(p, g.size());
    if (m.occurs_in(p.prefix(base))) return true;
    // An occurrence in a longer window is still an occurrence; two
    // consecutive misses settle the negative answer.
    return m.occurs_in(p.prefix(base + p.period()));
}

std::vector<Perm> basis_from_levels(const PatternLevels& levels) {
    std::vector<Perm> basis;
    for (std::size_t len = 1; len < levels.levels.size(); ++len) {
        PermSet prev(levels.levels[len - 1].begin(), levels.levels[len - 1].end());
        PermSet cur(levels.levels[len].begin(), levels.levels[len].end());
        PermSet seen;
        for (const Perm& g : levels.levels[len - 1]) {
            for (Perm& e : extensions(g)) {
                if (cur.count(e) || !seen.insert(e).second) continue;
                bool closed = true;
                for (std::size_t i = 0; i < e.size() && closed; ++i) closed = prev.count(delete_at(e, i)) > 0;
                if (closed) basis.push_back(std::move(e));
            }
        }
    }
    return sorted_unique(std::move(basis));
}

std::vector<Perm> basis_up_to(const PeriodicPerm& p, std::size_t n) {
    if (n < 1) throw InvalidInput("basis_up_to: n must be at least 1");
    return basis_from_levels(sub_pattern_levels(p, n));
}

// ------------------------------------------------------------ U / V

UVSequences uv_sequences(const PeriodicPerm& p, std::size_t r, std::size_t count) {
    if (r < 1) throw InvalidInput("uv_sequences: r must be a position (>= 1)");
    const std::size_t settle = boundary_settle_point(p);
    const auto bounds = p.component_boundaries(std::max(r, settle) + p.period());
    for (std::size_t j : bounds)
        if (j >= r)
            throw InvalidInput("uv_sequences: position " + std::to_string(r) +
                               " lies in a finite sum component (boundary after position " + std::to_string(j) + ")");

    UVSequences out;
    std::size_t prev_u = r;
    const long long slack = static_cast<long long>(p.displacement());
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t v = 1;
        long long top = p.term(1);
        for (std::size_t j = 2; j <= prev_u; ++j) {
            const long long t = p.term(j);
            if (t > top) {
                top = t;
                v = j;
            }
        }
        // π(j) >= j - D, so no position past top + D can hold a value <= top.
        std::size_t u = 0;
        const auto scan_end = static_cast<std::size_t>(top + slack);
        for (std::size_t j = 1; j <= scan_end; ++j)
            if (p.term(j) <= top) u = j;
        out.v.push_back(v);
        out.u.push_back(u);
        prev_u = u;
    }
    return out;
}

bool uv_interleaving_holds(const PeriodicPerm& p, const UVSequences& uv) {
    const std::size_t n = std::min(uv.u.size(), uv.v.size());
    // positions: v1 < v2 < u1 < v3 < u2 < v4 < ...
    std::vector<std::size_t> chain;
    if (n >= 1) chain.push_back(uv.v[0]);
    for (std::size_t i = 1; i < n; ++i) {
        chain.push_back(uv.v[i]);
        chain.push_back(uv.u[i - 1]);
    }
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!(chain[i - 1] < chain[i])) return false;
    // values: π(u1) < π(v1) < π(u2) < π(v2) < ...
    std::vector<long long> values;
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(p.term(uv.u[i]));
        values.push_back(p.term(uv.v[i]));
    }
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i])) return false;
    return true;
}

// ---------------------------------------------------------- landmarks

std::size_t default_landmark_horizon(const PeriodicPerm& p, std::size_t b) {
    return p.start() + 4 * (b + 1) * (p.period() + 2 * p.displacement());
}

namespace {

struct CExtent {
    std::size_t k = 0;
    std::size_t l = 0;
    bool found = false;
    friend bool operator==(const CExtent&, const CExtent&) = default;
};

Perm reversed(const Perm& g) {
    std::vector<int> v(g.begin(), g.end());
    std::reverse(v.begin(), v.end());
    return make_trusted(std::move(v));
}

CExtent c_extent(const PeriodicPerm& p, std::span<const Perm> C, std::size_t horizon) {
    const std::vector<int> host = p.prefix(horizon);
    std::vector<int> rev_host(host.rbegin(), host.rend());
    std::vector<Matcher> fwd, bwd;
    for (const Perm& c : C) {
        fwd.emplace_back(c);
        bwd.emplace_back(reversed(c));
    }
    CExtent out;
    for (std::size_t s = std::min(p.start() - 1, horizon); s >= 1 && !out.found; --s)
        for (const Matcher& m : fwd)
            if (m.occurs_in(host, s - 1, std::nullopt)) {
                out.k = s;
                out.found = true;
                break;
            }
    if (!out.found) return out;
    // The last point of an occurrence ending at e is the first point of the
    // reversed pattern in the reversed host.
    for (std::size_t e = horizon; e >= out.k; --e) {
        bool hit = false;
        for (const Matcher& m : bwd)
            if (m.occurs_in(rev_host, horizon - e, std::nullopt)) {
                hit = true;
                break;
            }
        if (hit) {
            out.l = e;
            break;
        }
    }
    return out;
}

}  // namespace

std::optional<Landmarks> landmarks(const PeriodicPerm& p, std::span<const Perm> C, std::size_t uv_count,
                                   std::optional<std::size_t> b, std::optional<std::size_t> horizon) {
    if (C.empty()) throw InvalidInput("landmarks: empty final-component set");
    std::size_t longest = 0;
    for (const Perm& c : C) longest = std::max(longest, c.size());

    // An occurrence starting at or after N shifts by P forever, so starts
    // would be unbounded.
    for (const Perm& c : C) {
        const Matcher m(c);
        const std::size_t span = c.size() * (p.period() + 2 * p.displacement()) + p.period();
        for (std::size_t extra : {std::size_t{0}, p.period()}) {
            std::vector<int> tail;
            for (std::size_t n = p.start(); n < p.start() + span + extra; ++n) tail.push_back(static_cast<int>(p.term(n)));
            if (m.occurs_in(tail))
                throw HorizonError("landmarks: occurrences of " + c.str() +
                                   " begin arbitrarily late (one starts inside the periodic part)");
        }
    }

    std::size_t h = horizon.value_or(default_landmark_horizon(p, b.value_or(longest)));
    h = std::max(h, p.start() + p.period());
    // Consecutive points of an occurrence of an indecomposable pattern are
    // at most 2D apart (a wider gap puts everything after it above
    // everything before it), so occurrences starting before N end by reach.
    const bool all_indecomposable =
        std::all_of(C.begin(), C.end(), [](const Perm& c) { return c.size() > 0 && is_indecomposable(c); });
    const std::size_t reach = p.start() - 1 + (longest - 1) * 2 * p.displacement();
    const bool exact = all_indecomposable && reach <= h;
    if (exact) h = std::max<std::size_t>(reach, 1);
    CExtent ext = c_extent(p, C, h);
    bool settled = exact;
    for (int raise = 0; raise < 2 && !settled; ++raise) {
        CExtent wider = c_extent(p, C, 2 * h);
        settled = wider == ext;
        ext = wider;
        h *= 2;
    }
    if (!settled)
        throw HorizonError("landmarks: C-occurrence positions still moving at horizon " + std::to_string(h));
    if (!ext.found) return std::nullopt;

    Landmarks out;
    out.k = ext.k;
    out.l = ext.l;
    out.horizon = h;
    UVSequences uv = uv_sequences(p, ext.l, uv_count);
    if (!uv_interleaving_holds(p, uv))
        throw std::logic_error("landmarks: interleaving inequalities failed for U(l), V(l)");
    out.u = std::move(uv.u);
    out.v = std::move(uv.v);
    return out;
}

Perm sigma(const PeriodicPerm& p, const UVSequences& uv, std::size_t i) {
    if (i < 1 || i > uv.u.size()) throw InvalidInput("sigma: index out of computed range");
    return flatten(p.prefix(uv.u[i - 1]));
}

Perm sigma_prime(const PeriodicPerm& p, const UVSequences& uv, std::size_t i) {
    if (i < 1 || i > uv.v.size()) throw InvalidInput("sigma_prime: index out of computed range");
    const long long cap = p.term(uv.v[i - 1]);
    std::vector<int> terms;
    for (int t : p.prefix(uv.u[i - 1]))
        if (t <= cap) terms.push_back(t);
    return flatten(terms);
}

std::size_t occurrences_in_window(const PeriodicPerm& p, const Perm& g, std::size_t window, std::size_t limit) {
    return Matcher(g).count_in(p.prefix(window), limit);
}

}  // namespace permclass
