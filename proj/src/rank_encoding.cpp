#include "permclass/rank_encoding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace permclass {

std::vector<std::vector<Perm>> source_levels(const ClassSource& src, std::size_t n) {
    return std::visit(
        [n](const auto& s) -> std::vector<std::vector<Perm>> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FiniteBasisClass>)
                return member_levels(s, n);
            else
                return sub_pattern_levels(s, n).levels;
        },
        src);
}

RankWord encode(std::span<const int> values) {
    RankWord out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        int count = 0;
        for (std::size_t i = 0; i <= k; ++i)
            if (values[i] >= values[k]) ++count;
        out[k] = count;
    }
    return out;
}

RankWord encode(const Perm& g) { return encode(g.values()); }

Perm decode(const RankWord& w) {
    std::vector<int> vals;
    vals.reserve(w.size());
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const int e = w[k - 1];
        if (e < 1 || static_cast<std::size_t>(e) > k)
            throw InvalidInput("decode: letter " + std::to_string(e) + " at position " + std::to_string(k) +
                               " is outside 1.." + std::to_string(k));
        // The new entry is the e-th largest of the first k.
        const int rank = static_cast<int>(k) - e + 1;
        for (auto& v : vals)
            if (v >= rank) ++v;
        vals.push_back(rank);
    }
    return make_trusted(std::move(vals));
}

std::vector<RankWord> encode_class(const ClassSource& src, std::size_t n) {
    std::vector<RankWord> out;
    for (const auto& level : source_levels(src, n))
        for (const auto& g : level) out.push_back(encode(g));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> max_letter_by_length(const std::vector<std::vector<Perm>>& levels) {
    std::vector<int> m(levels.size(), 0);
    int running = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        for (const auto& g : levels[k])
            for (int e : encode(g)) running = std::max(running, e);
        m[k] = running;
    }
    return m;
}

std::optional<std::size_t> theoretical_bound(const ClassSource& src) {
    if (const auto* c = std::get_if<FiniteBasisClass>(&src)) {
        const std::size_t b = c->max_basis_length();
        if (b >= 1) return 4 * (b - 1) * (b - 1);
    }
    return std::nullopt;
}

}  // namespace

AlphabetBound alphabet_bound(const ClassSource& src, std::size_t n) {
    const auto m = max_letter_by_length(source_levels(src, n));
    AlphabetBound out;
    out.m = m[n];
    out.stabilized = n >= 2 && m[n] == m[n - 1];
    out.theoretical = theoretical_bound(src);
    return out;
}

bool Dfa::accepts(const RankWord& w) const {
    std::size_t s = start;
    for (int e : w) {
        if (e < 1 || static_cast<std::size_t>(e) > alphabet) return false;
        s = delta[s][static_cast<std::size_t>(e - 1)];
        if (s == dead) return false;
    }
    return s != dead;
}

namespace {

// Moore refinement followed by BFS renumbering of live states; the dead
// state always comes last.
Dfa minimize_and_number(const Dfa& d) {
    const std::size_t n = d.num_states();
    std::vector<std::size_t> block(n);
    for (std::size_t s = 0; s < n; ++s) block[s] = s == d.dead ? 1 : 0;
    std::size_t blocks = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> key{block[s]};
            for (std::size_t t : d.delta[s]) key.push_back(block[t]);
            next[s] = ids.emplace(std::move(key), ids.size()).first->second;
        }
        block = std::move(next);
        if (ids.size() == blocks) break;
        blocks = ids.size();
    }

    const std::size_t dead_block = block[d.dead];
    std::vector<std::size_t> order(blocks, SIZE_MAX);
    std::vector<std::size_t> rep(blocks);
    for (std::size_t s = 0; s < n; ++s) rep[block[s]] = s;
    std::vector<std::size_t> queue;
    if (block[d.start] != dead_block) {
        order[block[d.start]] = 0;
        queue.push_back(block[d.start]);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (std::size_t t : d.delta[rep[queue[qi]]]) {
            const std::size_t b = block[t];
            if (b == dead_block || order[b] != SIZE_MAX) continue;
            order[b] = queue.size();
            queue.push_back(b);
        }

    Dfa out;
    out.alphabet = d.alphabet;
    out.dead = queue.size();
    out.start = block[d.start] == dead_block ? out.dead : 0;
    out.delta.assign(queue.size() + 1, std::vector<std::size_t>(d.alphabet, out.dead));
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t a = 0; a < d.alphabet; ++a) {
            const std::size_t b = block[d.delta[rep[queue[i]]][a]];
            out.delta[i][a] = b == dead_block ? out.dead : order[b];
        }
    return out;
}

struct Trie {
    std::size_t m;
    std::vector<std::vector<long>> child;  // -1 = absent
    std::vector<std::size_t> depth;
    std::vector<std::size_t> per_length;

    explicit Trie(std::size_t alphabet) : m(alphabet) {
        child.emplace_back(m, -1);
        depth.push_back(0);
    }
};

Trie build_trie(std::vector<RankWord> sample, std::size_t train_len, std::size_t m) {
    std::sort(sample.begin(), sample.end(),
              [](const RankWord& a, const RankWord& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    Trie t(m);
    t.per_length.assign(train_len + 1, 0);
    for (const auto& w : sample) {
        if (w.size() > train_len) throw InvalidInput("infer_dfa: sample word longer than train_len");
        ++t.per_length[w.size()];
        if (w.empty()) continue;
        std::size_t node = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const long c = w[i] >= 1 && static_cast<std::size_t>(w[i]) <= m ? t.child[node][w[i] - 1] : -1;
            if (c < 0) throw InvalidInput("infer_dfa: sample is not prefix-closed");
            node = static_cast<std::size_t>(c);
        }
        const int last = w.back();
        if (last < 1 || static_cast<std::size_t>(last) > m) throw InvalidInput("infer_dfa: letter outside alphabet");
        t.child[node][last - 1] = static_cast<long>(t.child.size());
        t.child.emplace_back(m, -1);
        t.depth.push_back(w.size());
    }
    if (t.per_length[0] == 0 && sample.size() > 0) throw InvalidInput("infer_dfa: sample lacks the empty word");
    return t;
}

bool accepts_exactly(const Dfa& d, const Trie& t, std::size_t train_len) {
    for (std::size_t n = 0; n <= train_len; ++n)
        if (count_words(d, n) != t.per_length[n]) return false;
    // Equal counts plus acceptance of every sample word gives equality.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, d.start}};
    while (!stack.empty()) {
        auto [node, state] = stack.back();
        stack.pop_back();
        if (state == d.dead) return false;
        for (std::size_t a = 0; a < t.m; ++a)
            if (t.child[node][a] >= 0) stack.emplace_back(static_cast<std::size_t>(t.child[node][a]), d.delta[state][a]);
    }
    return true;
}

}  // namespace

Dfa canonical_form(const Dfa& d) { return minimize_and_number(d); }

bool isomorphic(const Dfa& a, const Dfa& b) { return canonical_form(a) == canonical_form(b); }

Dfa infer_dfa_from_sample(const std::vector<RankWord>& sample, std::size_t train_len, std::size_t m) {
    const Trie t = build_trie(sample, train_len, m);
    const std::size_t nodes = t.child.size();
    if (t.per_length[0] == 0) {
        Dfa empty;
        empty.alphabet = m;
        empty.delta.assign(1, std::vector<std::size_t>(m, 0));
        return empty;
    }

    // sig[u] after h rounds identifies the residual language of u truncated
    // to length h; it is exact for nodes of depth <= train_len - h.
    std::vector<long> sig(nodes, 0);
    for (std::size_t h = 1; h < train_len; ++h) {
        std::map<std::vector<long>, long> ids;
        std::vector<long> next(nodes);
        for (std::size_t u = 0; u < nodes; ++u) {
            std::vector<long> key;
            key.reserve(m);
            for (std::size_t a = 0; a < m; ++a) key.push_back(t.child[u][a] < 0 ? -1 : sig[t.child[u][a]]);
            next[u] = ids.emplace(std::move(key), static_cast<long>(ids.size())).first->second;
        }
        sig = std::move(next);

        const std::size_t exact_depth = train_len - h;
        std::map<long, std::size_t> state_of;
        for (std::size_t u = 0; u < nodes; ++u)
            if (t.depth[u] <= exact_depth) state_of.emplace(sig[u], state_of.size());
        const std::size_t live = state_of.size();
        const std::size_t dead = live;
        std::vector<std::vector<std::size_t>> delta(live + 1, std::vector<std::size_t>(m, SIZE_MAX));
        delta[dead].assign(m, dead);
        bool consistent = true;
        for (std::size_t u = 0; u < nodes && consistent; ++u) {
            if (t.depth[u] + 1 > exact_depth) continue;
            const std::size_t s = state_of.at(sig[u]);
            for (std::size_t a = 0; a < m; ++a) {
                const long c = t.child[u][a];
                const std::size_t target = c < 0 ? dead : state_of.at(sig[c]);
                if (delta[s][a] == SIZE_MAX)
                    delta[s][a] = target;
                else if (delta[s][a] != target)
                    consistent = false;
            }
        }
        // Closedness: every state needs a representative shallow enough to
        // have its transitions observed.
        for (std::size_t s = 0; s < live && consistent; ++s)
            if (delta[s][0] == SIZE_MAX) consistent = false;
        if (!consistent) continue;

        Dfa d;
        d.alphabet = m;
        d.start = state_of.at(sig[0]);
        d.dead = dead;
        d.delta = std::move(delta);
        d = minimize_and_number(d);
        if (accepts_exactly(d, t, train_len)) return d;
    }
    throw InferenceUnstable("infer_dfa: no automaton consistent with the sample at train_len " +
                            std::to_string(train_len) + "; raise train_len");
}

Dfa infer_dfa(const ClassSource& src, std::size_t train_len) {
    const auto levels = source_levels(src, train_len + 1);
    const auto m = max_letter_by_length(levels);
    if (train_len < 2 || m[train_len] != m[train_len - 1] || m[train_len + 1] != m[train_len])
        throw InvalidInput("infer_dfa: alphabet has not stabilized by length " + std::to_string(train_len) +
                           " (max letter " + std::to_string(m[train_len]) + ")");
    const auto alphabet = static_cast<std::size_t>(m[train_len]);
    if (train_len < alphabet + 2)
        throw InvalidInput("infer_dfa: train_len must be at least alphabet size + 2 = " + std::to_string(alphabet + 2));

    std::vector<RankWord> sample;
    for (std::size_t k = 0; k <= train_len; ++k)
        for (const auto& g : levels[k]) sample.push_back(encode(g));
    Dfa d = infer_dfa_from_sample(sample, train_len, alphabet);

    for (const auto& g : levels[train_len + 1]) sample.push_back(encode(g));
    Dfa again;
    try {
        again = infer_dfa_from_sample(sample, train_len + 1, alphabet);
    } catch (const InferenceUnstable&) {
        throw InferenceUnstable("infer_dfa: inference at train_len + 1 failed; raise train_len");
    }
    if (!(again == d))
        throw InferenceUnstable("infer_dfa: automaton changed between train_len " + std::to_string(train_len) +
                                " and " + std::to_string(train_len + 1) + "; raise train_len");
    return d;
}

BigInt count_words(const Dfa& d, std::size_t n) {
    std::vector<BigInt> cur(d.num_states(), 0);
    cur[d.start] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<BigInt> next(d.num_states(), 0);
        for (std::size_t s = 0; s < d.num_states(); ++s) {
            if (s == d.dead || cur[s] == 0) continue;
            for (std::size_t t : d.delta[s]) next[t] += cur[s];
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (std::size_t s = 0; s < d.num_states(); ++s)
        if (s != d.dead) total += cur[s];
    return total;
}

GenFun rational_gf(const Dfa& d) {
    GenFun out;
    if (d.start == d.dead) {
        out = GenFun{Poly(), Poly(1)};
    } else {
        // Live states reachable from the start, start first.
        std::vector<std::size_t> live{d.start};
        std::vector<long> index(d.num_states(), -1);
        index[d.start] = 0;
        for (std::size_t qi = 0; qi < live.size(); ++qi)
            for (std::size_t t : d.delta[live[qi]])
                if (t != d.dead && index[t] < 0) {
                    index[t] = static_cast<long>(live.size());
                    live.push_back(t);
                }
        const std::size_t n = live.size();
        // (I - xM) F = 1, solved for F_start by Cramer's rule.
        std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long long> row(n, 0);
            for (std::size_t t : d.delta[live[i]])
                if (t != d.dead) ++row[static_cast<std::size_t>(index[t])];
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = Poly(i == j ? 1 : 0) - Poly(row[j]) * Poly::x();
        }
        const Poly den = determinant(a);
        for (std::size_t i = 0; i < n; ++i) a[i][0] = Poly(1);
        const Poly num = determinant(a);
        out = GenFun::normalized(num, den);
    }

    const std::size_t checks = 2 * d.num_states() + 2;
    const auto series = out.series(checks + 1);
    for (std::size_t k = 0; k <= checks; ++k)
        if (series[k] != count_words(d, k))
            throw std::logic_error("rational_gf: series disagrees with word count at length " + std::to_string(k));
    return out;
}

int PeriodicRankWord::letter(std::size_t j) const {
    if (j == 0) throw InvalidInput("PeriodicRankWord::letter: positions start at 1");
    if (j > window.size()) {
        const std::size_t last = start + period - 1;
        j -= period * ((j - last + period - 1) / period);
    }
    return window[j - 1];
}

int PeriodicRankWord::max_letter() const {
    return window.empty() ? 0 : *std::max_element(window.begin(), window.end());
}

void validate(const PeriodicRankWord& w) {
    if (w.start < 1 || w.period < 1) throw InvalidInput("periodic rank word: N and P must be positive");
    if (w.window.size() < w.start + w.period - 1)
        throw InvalidInput("periodic rank word: window shorter than N+P-1");
    for (std::size_t k = 1; k <= w.window.size(); ++k) {
        const int e = w.window[k - 1];
        if (e < 1 || static_cast<std::size_t>(e) > k)
            throw InvalidInput("periodic rank word: letter " + std::to_string(e) + " at position " + std::to_string(k) +
                               " is outside 1.." + std::to_string(k));
        if (k >= w.start + w.period && e != w.window[k - 1 - w.period])
            throw InvalidInput("periodic rank word: window disagrees with period at position " + std::to_string(k));
    }
}

PeriodicRankWord encode_periodic(const PeriodicPerm& p) {
    const std::size_t P = p.period();
    // Every weakly greater predecessor of π(j) lies within 2D positions, so
    // the letters repeat with period P once j - 2D >= N.
    const std::size_t settled = p.start() + 2 * p.displacement();
    const std::size_t len = settled + 2 * P;
    const auto letters = encode(std::span<const int>(p.prefix(len)));
    auto e = [&](std::size_t j) { return letters[j - 1]; };

    std::size_t q = P;
    for (std::size_t cand = 1; cand < P; ++cand) {
        if (P % cand != 0) continue;
        bool ok = true;
        for (std::size_t j = settled; j < settled + P && ok; ++j) ok = e(j) == e(j + cand);
        if (ok) {
            q = cand;
            break;
        }
    }
    std::size_t n0 = settled;
    while (n0 > 1 && e(n0 - 1) == e(n0 - 1 + q)) --n0;

    PeriodicRankWord out;
    out.window.assign(letters.begin(), letters.begin() + static_cast<long>(n0 + q - 1));
    out.start = n0;
    out.period = q;
    return out;
}

long long recover_values(const PeriodicRankWord& e, std::size_t j, std::size_t horizon) {
    if (j < 1) throw InvalidInput("recover_values: j must be at least 1");
    const int top = e.max_letter();
    const int ej = e.letter(j);
    long long h = ej;
    long long smaller_later = 0;
    // Once h reaches the largest letter no later term can be smaller.
    for (std::size_t i = 1; h < top; ++i) {
        if (i > horizon)
            throw HorizonError("recover_values: count of later smaller terms unsettled after " +
                               std::to_string(horizon) + " letters");
        if (e.letter(j + i) > h)
            ++smaller_later;
        else
            ++h;
    }
    return static_cast<long long>(j) - ej + smaller_later + 1;
}

}  // namespace permclass
