#include "permclass/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace permclass {

std::string to_string(Branch b) {
    switch (b) {
        case Branch::SumForm: return "sum-form";
        case Branch::Periodic: return "periodic";
        case Branch::Undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

void cross_check_basis(const std::vector<std::vector<Perm>>& sub, const FiniteBasisClass& B) {
    const auto claimed = member_levels(B, sub.size() - 1);
    for (std::size_t n = 0; n < sub.size(); ++n) {
        if (claimed[n] == sub[n]) continue;
        std::vector<Perm> only_sub, only_claimed;
        std::set_difference(sub[n].begin(), sub[n].end(), claimed[n].begin(), claimed[n].end(),
                            std::back_inserter(only_sub));
        std::set_difference(claimed[n].begin(), claimed[n].end(), sub[n].begin(), sub[n].end(),
                            std::back_inserter(only_claimed));
        if (!only_sub.empty())
            throw InconsistentInput("basis excludes " + only_sub.front().str() + ", which lies in Sub(pi)");
        throw InconsistentInput("basis admits " + only_claimed.front().str() + ", which is not in Sub(pi)");
    }
}

// Greatest 1-based start of an occurrence of some element of C in `host`.
std::size_t last_start(std::span<const int> host, const std::vector<Perm>& C) {
    std::vector<Matcher> ms;
    for (const auto& c : C) ms.emplace_back(c);
    for (std::size_t s = host.size(); s >= 1; --s)
        for (const auto& m : ms)
            if (m.occurs_in(host, s - 1, std::nullopt)) return s;
    return 0;
}

std::vector<std::size_t> prefix_boundaries(std::span<const int> values) {
    std::vector<std::size_t> out;
    int running = 0;
    for (std::size_t j = 1; j <= values.size(); ++j) {
        running = std::max(running, values[j - 1]);
        if (running == static_cast<int>(j)) out.push_back(j);
    }
    return out;
}

}  // namespace

DichotomyReport classify(const InfinitePerm& p, const FiniteBasisClass& B, std::size_t depth) {
    if (B.basis().empty()) throw InvalidInput("classify: the basis is empty; Sub(pi) of an infinite pi is never the full class");
    DichotomyReport rep;
    rep.verified_to = depth;

    const auto* periodic = std::get_if<PeriodicPerm>(&p);
    const auto* raw = std::get_if<RawPrefix>(&p);
    const PatternLevels sub = periodic ? sub_pattern_levels(*periodic, depth) : sub_pattern_levels(*raw, depth);
    cross_check_basis(sub.levels, B);
    if (raw) rep.notes.push_back("prefix input: every conclusion describes the given prefix only");

    const std::vector<Perm> C = final_components(B);
    rep.C = C;

    std::vector<std::size_t> boundaries;
    if (periodic) {
        try {
            const auto lm = landmarks(*periodic, C);
            rep.k = lm ? lm->k : 0;
            rep.window = lm ? lm->horizon : periodic->window().size();
        } catch (const HorizonError& e) {
            rep.branch = Branch::Undetermined;
            rep.window = default_landmark_horizon(*periodic, B.max_basis_length());
            rep.notes.push_back(std::string("landmark scan did not settle: ") + e.what());
            return rep;
        }
        const auto last = periodic->last_boundary();
        const std::size_t from = std::max<std::size_t>(rep.k, 1);
        if (!last) {
            // Infinitely many components; the first one at or after k will do.
            std::size_t upto = std::max(rep.window, from + periodic->start() + 2 * periodic->period());
            while (boundaries.empty() || boundaries.back() < from) {
                boundaries = periodic->component_boundaries(upto);
                upto *= 2;
            }
        } else if (*last >= from) {
            boundaries = periodic->component_boundaries(*last);
        }
        rep.window = std::max(rep.window, boundaries.empty() ? 0 : boundaries.back());
    } else {
        rep.k = last_start(raw->values, C);
        rep.window = raw->values.size();
        boundaries = prefix_boundaries(raw->values);
        // A boundary at the very end says nothing about what follows.
        if (!boundaries.empty() && boundaries.back() == raw->values.size()) boundaries.pop_back();
    }

    const std::size_t from = std::max<std::size_t>(rep.k, 1);
    const auto j = std::find_if(boundaries.begin(), boundaries.end(), [&](std::size_t b) { return b >= from; });
    if (j != boundaries.end()) {
        const std::vector<int> head = periodic ? periodic->prefix(rep.k == 0 ? 0 : *j)
                                               : std::vector<int>(raw->values.begin(),
                                                                  raw->values.begin() + static_cast<long>(rep.k == 0 ? 0 : *j));
        const Perm gamma = flatten(head);
        const FiniteBasisClass S(C);
        const ClassSource X = periodic ? ClassSource(*periodic) : ClassSource(*raw);
        if (!verify_sum_form(gamma, S, X, depth)) {
            rep.branch = Branch::Undetermined;
            rep.notes.push_back("component boundary found after k, but Sub(gamma) + A(C) differs from X within depth");
            return rep;
        }
        rep.branch = Branch::SumForm;
        rep.gamma = gamma;
        return rep;
    }

    if (periodic) {
        rep.branch = Branch::Periodic;
        const auto [N, P] = periodic->canonical_period();
        rep.period = std::make_pair(N, P);
        rep.window = std::max(rep.window, N + P - 1);
        return rep;
    }
    if (raw->values.size() >= 4) {
        if (const auto np = check_eventual_periodicity(raw->values)) {
            rep.branch = Branch::Periodic;
            rep.period = np;
            rep.notes.push_back("period detected on the prefix; not a proof for the infinite permutation");
            return rep;
        }
    }
    rep.branch = Branch::Undetermined;
    rep.notes.push_back("no component boundary after k and no period within " + std::to_string(rep.window) + " terms");
    return rep;
}

std::vector<std::vector<Perm>> sum_form_levels(const Perm& gamma, const FiniteBasisClass& S, std::size_t depth) {
    const auto heads = host_pattern_levels(gamma.values(), std::min(gamma.size(), depth)).levels;
    const auto tails = member_levels(S, depth);
    std::vector<std::vector<Perm>> out(depth + 1);
    for (std::size_t a = 0; a < heads.size(); ++a)
        for (const auto& g : heads[a])
            for (std::size_t b = 0; a + b <= depth; ++b)
                for (const auto& s : tails[b]) out[a + b].push_back(direct_sum(g, s));
    for (auto& level : out) level = sorted_unique(std::move(level));
    return out;
}

bool verify_sum_form(const Perm& gamma, const FiniteBasisClass& S, const ClassSource& X, std::size_t depth) {
    if (!is_sum_complete(S)) throw InvalidInput("verify_sum_form: S is not sum-complete");
    return sum_form_levels(gamma, S, depth) == source_levels(X, depth);
}

SUniquenessReport check_S_uniqueness(const Perm& gamma1, const FiniteBasisClass& S1, const Perm& gamma2,
                                     const FiniteBasisClass& S2, std::size_t depth) {
    if (!is_sum_complete(S1) || !is_sum_complete(S2))
        throw InvalidInput("check_S_uniqueness: both classes must be sum-complete");
    SUniquenessReport rep;
    rep.depth = depth;
    const std::size_t offset = std::max(gamma1.size(), gamma2.size());
    rep.s_depth = depth > offset ? depth - offset : 0;
    rep.classes_agree = sum_form_levels(gamma1, S1, depth) == sum_form_levels(gamma2, S2, depth);
    rep.s_agree = member_levels(S1, rep.s_depth) == member_levels(S2, rep.s_depth);
    rep.holds = !rep.classes_agree || rep.s_agree;
    rep.status = !rep.classes_agree ? "classes-differ" : rep.s_agree ? "s-agree" : "s-differ";
    return rep;
}

Perm twin_oscillation_basis_family(std::size_t n) {
    if (n < 1) throw InvalidInput("twin_oscillation_basis_family: n must be at least 1");
    // 2 3, then pairs (2i+3, low_i), then the closing twin 4n 4n+1 and the
    // last low; lows run 1, 4, 6, 8, ...
    auto low = [](std::size_t i) { return i == 1 ? 1 : static_cast<int>(2 * i); };
    std::vector<int> seq{2, 3};
    for (std::size_t i = 1; i + 2 <= 2 * n; ++i) {
        seq.push_back(static_cast<int>(2 * i + 3));
        seq.push_back(low(i));
    }
    seq.push_back(static_cast<int>(4 * n));
    seq.push_back(static_cast<int>(4 * n + 1));
    seq.push_back(low(2 * n - 1));
    return Perm(std::move(seq));
}

bool verify_basis_element(const PeriodicPerm& p, const Perm& beta) {
    if (in_sub(p, beta)) return false;
    if (beta.size() == 0) return false;
    for (const auto& d : deletions(beta))
        if (!in_sub(p, d)) return false;
    return true;
}

PeriodicPerm twin_oscillation() { return PeriodicPerm({2, 3, 5, 1, 7, 8, 4, 10, 6, 12, 13, 9, 15, 11}, 5, 5); }

PeriodicPerm increasing_oscillation() { return PeriodicPerm({2, 4, 1, 6, 3}, 2, 2); }

RawPrefix layered_prefix(std::size_t len) {
    std::vector<int> out;
    int base = 0;
    for (int layer = 1; out.size() < len; ++layer) {
        for (int v = base + layer; v > base && out.size() < len; --v) out.push_back(v);
        base += layer;
    }
    return RawPrefix(out);
}

RawPrefix growing_block_prefix(std::size_t len) {
    std::vector<int> out{3, 2, 5, 1};
    std::set<int> used(out.begin(), out.end());
    int block_start = 7;
    for (int i = 1; out.size() < len; ++i) {
        for (int v = block_start; v <= block_start + i; ++v) {
            out.push_back(v);
            used.insert(v);
        }
        int low = 1;
        while (used.count(low)) ++low;
        out.push_back(low);
        used.insert(low);
        block_start += i + 2;
    }
    out.resize(std::min(out.size(), len));
    return RawPrefix(out);
}

GrowingBlockReport growing_block_nonexample(std::size_t depth) {
    if (depth < 10) throw InvalidInput("growing_block_nonexample: depth must be at least 10");
    GrowingBlockReport rep;
    rep.prefix = growing_block_prefix(depth).values;
    rep.periodicity = check_eventual_periodicity(rep.prefix);

    // Each low value follows a block (the first one follows 3 2 5), so
    // after the opening four terms the lows are exactly the descent bottoms.
    for (std::size_t j = 3; j < rep.prefix.size(); ++j) {
        if (j > 3 && rep.prefix[j] > rep.prefix[j - 1]) continue;
        const std::vector<int> seg(rep.prefix.begin(), rep.prefix.begin() + static_cast<long>(j) + 1);
        rep.xi.push_back(flatten(seg));
    }
    for (const auto& xi : rep.xi) {
        rep.embeddings.push_back(Matcher(xi).count_in(rep.prefix, 2));
        rep.doubled_embeds.push_back(Matcher(direct_sum(xi, xi)).occurs_in(rep.prefix));
        rep.indecomposable.push_back(is_indecomposable(xi));
    }
    return rep;
}

}  // namespace permclass
