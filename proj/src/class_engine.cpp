#include "permclass/class_engine.hpp"

#include <algorithm>
#include <unordered_set>

#include "permclass/parallel.hpp"

namespace permclass {

FiniteBasisClass::FiniteBasisClass(std::vector<Perm> raw_basis) {
    std::vector<Perm> raw = sorted_unique(std::move(raw_basis));
    std::stable_sort(raw.begin(), raw.end(), [](const Perm& a, const Perm& b) { return a.size() < b.size(); });
    for (const Perm& p : raw) {
        bool redundant = false;
        for (const Perm& q : basis_)
            if (involves(p, q)) {
                redundant = true;
                break;
            }
        if (!redundant) basis_.push_back(p);
    }
    std::sort(basis_.begin(), basis_.end());
    for (const Perm& p : basis_) b_ = std::max(b_, p.size());
}

FiniteBasisClass normalize_basis(std::vector<Perm> raw) { return FiniteBasisClass(std::move(raw)); }

bool contains(const FiniteBasisClass& c, const Perm& g) {
    for (const Perm& beta : c.basis())
        if (involves(g, beta)) return false;
    return true;
}

namespace {

// An extension of a member by a new maximum can only create an occurrence
// of a basis element that uses the new point, but checking the whole
// candidate keeps this independent of that argument and is cheap enough.
std::vector<Perm> extend_level(const FiniteBasisClass& c, const std::vector<Perm>& level) {
    std::vector<Matcher> matchers;
    for (const Perm& beta : c.basis()) matchers.emplace_back(beta);

    std::vector<Perm> candidates;
    for (const Perm& g : level) {
        const std::size_t n = g.size();
        for (std::size_t pos = 0; pos <= n; ++pos) {
            std::vector<int> v(g.begin(), g.end());
            v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(n + 1));
            candidates.push_back(make_trusted(std::move(v)));
        }
    }
    std::vector<Perm> next = parallel_filter(candidates, [&](const Perm& cand) {
        for (const Matcher& m : matchers)
            if (m.pattern().size() <= cand.size() && m.occurs_in(cand.values())) return false;
        return true;
    });
    return sorted_unique(std::move(next));
}

}  // namespace

std::vector<std::vector<Perm>> member_levels(const FiniteBasisClass& c, std::size_t n) {
    std::vector<std::vector<Perm>> levels;
    levels.push_back(contains(c, Perm{}) ? std::vector<Perm>{Perm{}} : std::vector<Perm>{});
    for (std::size_t len = 1; len <= n; ++len) levels.push_back(extend_level(c, levels.back()));
    return levels;
}

std::vector<Perm> members(const FiniteBasisClass& c, std::size_t n) { return member_levels(c, n).back(); }

std::vector<BigInt> count_profile(const FiniteBasisClass& c, std::size_t max_n) {
    std::vector<BigInt> counts;
    for (const auto& level : member_levels(c, max_n)) counts.emplace_back(level.size());
    return counts;
}

bool is_sum_complete(const FiniteBasisClass& c) {
    return std::all_of(c.basis().begin(), c.basis().end(), [](const Perm& beta) { return is_indecomposable(beta); });
}

std::vector<Perm> final_components(const FiniteBasisClass& c) {
    if (c.basis().empty()) throw InvalidInput("final_components: the empty basis has no final components");
    std::vector<Perm> out;
    for (const Perm& beta : c.basis()) {
        if (beta.empty()) continue;
        out.push_back(sum_decompose(beta).back());
    }
    return sorted_unique(std::move(out));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::RefutedCertified: return "refuted-certified";
        case Verdict::EvidenceUpTo: return "evidence-up-to";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

AtomicityReport atomicity_check(const FiniteBasisClass& c, std::size_t pair_len, std::size_t witness_len) {
    if (pair_len < 1) throw InvalidInput("atomicity_check: pair_len must be at least 1");
    if (witness_len < pair_len) throw InvalidInput("atomicity_check: witness_len must be at least pair_len");

    AtomicityReport report;
    report.pair_len = pair_len;
    report.witness_len = witness_len;

    std::vector<Perm> pool;
    const auto levels = member_levels(c, pair_len);
    for (std::size_t len = 1; len < levels.size(); ++len)
        pool.insert(pool.end(), levels[len].begin(), levels[len].end());

    struct Pair {
        std::size_t total;
        const Perm* a;
        const Perm* b;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            pairs.push_back({pool[i].size() + pool[j].size(), &pool[i], &pool[j]});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.total != y.total) return x.total < y.total;
        if (*x.a != *y.a) return *x.a < *y.a;
        return *x.b < *y.b;
    });

    std::optional<std::pair<Perm, Perm>> blocked;
    for (const Pair& pr : pairs) {
        ++report.pairs_examined;
        const Perm& alpha = *pr.a;
        const Perm& beta = *pr.b;
        if (involves(alpha, beta) || involves(beta, alpha)) continue;

        std::vector<Perm> mergers = minimal_mergers(alpha, beta);
        std::optional<std::size_t> shortest_inside;
        for (const Perm& g : mergers)
            if (contains(c, g) && (!shortest_inside || g.size() < *shortest_inside)) shortest_inside = g.size();

        if (!shortest_inside) {
            std::vector<Perm> with_alpha = c.basis(), with_beta = c.basis();
            with_alpha.push_back(alpha);
            with_beta.push_back(beta);
            report.verdict = Verdict::RefutedCertified;
            report.witness_pair = std::make_pair(alpha, beta);
            report.decomposition = std::make_pair(FiniteBasisClass(std::move(with_alpha)),
                                                  FiniteBasisClass(std::move(with_beta)));
            report.mergers = std::move(mergers);
            return report;
        }
        if (*shortest_inside > witness_len && !blocked) blocked = std::make_pair(alpha, beta);
    }

    if (blocked) {
        report.verdict = Verdict::Inconclusive;
        report.witness_pair = blocked;
    } else {
        report.verdict = Verdict::EvidenceUpTo;
    }
    return report;
}

}  // namespace permclass
