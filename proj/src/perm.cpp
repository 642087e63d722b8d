#include "permclass/perm.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

namespace permclass {

Perm make_trusted(std::vector<int> values) { return Perm(std::move(values), Perm::Trusted{}); }

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
    const auto n = static_cast<int>(values_.size());
    std::vector<int> seen(values_.size() + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n)
            throw InvalidInput("not a permutation: value " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
        if (seen[v]++)
            throw InvalidInput("not a permutation: value " + std::to_string(v) + " is duplicated");
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw InvalidInput("not a permutation: value " + std::to_string(v) + " is missing");
}

Perm Perm::parse(std::string_view text) {
    std::vector<int> values;
    bool separated = false;
    for (char c : text)
        if (c == ' ' || c == ',' || c == '\t') separated = true;

    if (!separated) {
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidInput("bad permutation text: '" + std::string(text) + "'");
            values.push_back(c - '0');
        }
        if (values.size() > 9)
            throw InvalidInput("compact permutation form is limited to length 9; use spaces");
        return Perm(std::move(values));
    }

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i == text.size()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc())
            throw InvalidInput("bad permutation text: '" + std::string(text) + "'");
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Perm(std::move(values));
}

Perm Perm::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return make_trusted(std::move(v));
}

Perm Perm::decreasing(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
    return make_trusted(std::move(v));
}

std::string Perm::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string Perm::compact() const {
    if (values_.size() > 9) return str();
    std::string out;
    for (int v : values_) out += static_cast<char>('0' + v);
    return out;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
    std::size_t h = p.size() * 0x9E3779B97F4A7C15ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001B3ull + (h >> 29);
    return h;
}

// ---------------------------------------------------------------- Matcher

Matcher::Matcher(const Perm& pattern) : pattern_(pattern) {
    const std::size_t k = pattern.size();
    lower_.assign(k, -1);
    upper_.assign(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (pattern[j] < pattern[i]) {
                if (lower_[i] < 0 || pattern[j] > pattern[lower_[i]]) lower_[i] = static_cast<int>(j);
            } else if (upper_[i] < 0 || pattern[j] < pattern[upper_[i]]) {
                upper_[i] = static_cast<int>(j);
            }
        }
    }
}

template <class Visit>
void Matcher::search(std::span<const int> host, std::optional<std::size_t> first,
                     std::optional<std::size_t> last, Visit&& visit) const {
    const std::size_t k = pattern_.size();
    const std::size_t n = host.size();
    if (k == 0) {
        if (!first && !last) visit(std::span<const std::size_t>{});
        return;
    }
    if (k > n || (first && *first >= n) || (last && *last >= n)) return;
    if (last && *last + 1 < k) return;

    // Admissible host index range [begin, end) for pattern slot i.
    auto range_of = [&](std::size_t i) -> std::pair<std::size_t, std::size_t> {
        const std::size_t after = k - 1 - i;
        std::size_t begin = 0, end = n - after;
        if (last) end = std::min(end, *last - after + 1);
        if (i == 0 && first) {
            begin = *first;
            end = std::min(end, *first + 1);
        }
        if (i + 1 == k && last) begin = std::max(begin, *last);
        return {begin, end};
    };

    std::vector<std::size_t> emb(k);
    std::vector<std::size_t> cursor(k);
    std::size_t i = 0;
    cursor[0] = range_of(0).first;

    while (true) {
        auto [begin, end] = range_of(i);
        std::size_t pos = std::max(cursor[i], begin);
        const bool has_lo = lower_[i] >= 0;
        const bool has_hi = upper_[i] >= 0;
        const int lo = has_lo ? host[emb[lower_[i]]] : 0;
        const int hi = has_hi ? host[emb[upper_[i]]] : 0;
        for (; pos < end; ++pos) {
            const int v = host[pos];
            if ((!has_lo || v > lo) && (!has_hi || v < hi)) break;
        }
        if (pos < end) {
            emb[i] = pos;
            cursor[i] = pos + 1;
            if (i + 1 == k) {
                if (!visit(std::span<const std::size_t>(emb))) return;
            } else {
                ++i;
                cursor[i] = pos + 1;
            }
            continue;
        }
        if (i == 0) return;
        --i;
    }
}

bool Matcher::occurs_in(std::span<const int> host) const {
    return occurs_in(host, std::nullopt, std::nullopt);
}

bool Matcher::occurs_in(std::span<const int> host, std::optional<std::size_t> first,
                        std::optional<std::size_t> last) const {
    bool found = false;
    search(host, first, last, [&](std::span<const std::size_t>) {
        found = true;
        return false;
    });
    return found;
}

std::size_t Matcher::count_in(std::span<const int> host, std::size_t limit) const {
    std::size_t count = 0;
    if (limit == 0) return 0;
    search(host, std::nullopt, std::nullopt, [&](std::span<const std::size_t>) { return ++count < limit; });
    return count;
}

std::vector<std::vector<std::size_t>> Matcher::occurrences_in(std::span<const int> host,
                                                              std::size_t limit) const {
    std::vector<std::vector<std::size_t>> out;
    if (limit == 0) return out;
    search(host, std::nullopt, std::nullopt, [&](std::span<const std::size_t> emb) {
        out.emplace_back(emb.begin(), emb.end());
        return out.size() < limit;
    });
    return out;
}

bool involves(std::span<const int> host, const Perm& pattern) {
    if (pattern.size() > host.size()) return false;
    return Matcher(pattern).occurs_in(host);
}

bool involves(const Perm& host, const Perm& pattern) {
    if (pattern.size() > host.size()) return false;
    if (pattern.size() == host.size()) return pattern == host;
    return involves(host.values(), pattern);
}

// ------------------------------------------------------------ sums

Perm direct_sum(const Perm& a, const Perm& b) {
    std::vector<int> v(a.begin(), a.end());
    const int shift = static_cast<int>(a.size());
    for (int x : b) v.push_back(x + shift);
    return make_trusted(std::move(v));
}

Perm direct_sum(std::span<const Perm> parts) {
    std::vector<int> v;
    int shift = 0;
    for (const Perm& p : parts) {
        for (int x : p) v.push_back(x + shift);
        shift += static_cast<int>(p.size());
    }
    return make_trusted(std::move(v));
}

std::vector<Perm> sum_decompose(const Perm& g) {
    std::vector<Perm> parts;
    std::size_t start = 0;
    int running_max = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        running_max = std::max(running_max, g[i]);
        if (running_max == static_cast<int>(i + 1)) {
            std::vector<int> piece;
            for (std::size_t j = start; j <= i; ++j) piece.push_back(g[j] - static_cast<int>(start));
            parts.push_back(make_trusted(std::move(piece)));
            start = i + 1;
        }
    }
    return parts;
}

bool is_indecomposable(const Perm& g) {
    if (g.empty()) throw InvalidInput("is_indecomposable: decomposability is undefined for the empty permutation");
    int running_max = 0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        running_max = std::max(running_max, g[i]);
        if (running_max == static_cast<int>(i + 1)) return false;
    }
    return true;
}

// ------------------------------------------------------- deletions

Perm delete_at(const Perm& g, std::size_t pos) {
    std::vector<int> v;
    v.reserve(g.size() - 1);
    const int removed = g[pos];
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == pos) continue;
        v.push_back(g[i] > removed ? g[i] - 1 : g[i]);
    }
    return make_trusted(std::move(v));
}

std::vector<Perm> deletions(const Perm& g) {
    if (g.empty()) throw InvalidInput("deletions: the empty permutation has no entries to delete");
    std::vector<Perm> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(delete_at(g, i));
    return out;
}

std::vector<Perm> extensions(const Perm& g) {
    const std::size_t n = g.size();
    std::vector<Perm> out;
    out.reserve((n + 1) * (n + 1));
    for (std::size_t pos = 0; pos <= n; ++pos) {
        for (int val = 1; val <= static_cast<int>(n) + 1; ++val) {
            std::vector<int> v;
            v.reserve(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                if (i == pos) v.push_back(val);
                if (i < n) v.push_back(g[i] >= val ? g[i] + 1 : g[i]);
            }
            out.push_back(make_trusted(std::move(v)));
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<Perm> sorted_unique(std::vector<Perm> perms) {
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms;
}

std::vector<Perm> all_perms(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(make_trusted(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ----------------------------------------------------- mergers
//
// A minimal merger is the union of one occurrence of a and one of b, so it
// is enough to enumerate the ways of interleaving the two point sets: first
// along positions (possibly identifying an a-point with a b-point), then
// along values with the same identifications.

namespace {

struct MergeContext {
    const Perm& a;
    const Perm& b;
    std::vector<int> a_by_value;  // a's positions listed by increasing value
    std::vector<int> b_by_value;
    std::set<Perm>& out;

    // Per merged point: source a-index (or -1) and b-index (or -1).
    std::vector<std::pair<int, int>> points;
    std::vector<int> partner_of_a;  // b-index identified with a-index, or -1
    std::vector<int> partner_of_b;
    std::vector<int> point_of_a;  // merged point holding a-index
    std::vector<int> point_of_b;

    void merge_positions(std::size_t i, std::size_t j) {
        if (i == a.size() && j == b.size()) {
            std::vector<int> values(points.size(), 0);
            merge_values(0, 0, 1, values);
            return;
        }
        if (i < a.size()) {
            points.emplace_back(static_cast<int>(i), -1);
            point_of_a[i] = static_cast<int>(points.size() - 1);
            merge_positions(i + 1, j);
            points.pop_back();
        }
        if (j < b.size()) {
            points.emplace_back(-1, static_cast<int>(j));
            point_of_b[j] = static_cast<int>(points.size() - 1);
            merge_positions(i, j + 1);
            points.pop_back();
        }
        if (i < a.size() && j < b.size()) {
            points.emplace_back(static_cast<int>(i), static_cast<int>(j));
            point_of_a[i] = point_of_b[j] = static_cast<int>(points.size() - 1);
            partner_of_a[i] = static_cast<int>(j);
            partner_of_b[j] = static_cast<int>(i);
            merge_positions(i + 1, j + 1);
            partner_of_a[i] = partner_of_b[j] = -1;
            points.pop_back();
        }
    }

    void merge_values(std::size_t x, std::size_t y, int next, std::vector<int>& values) {
        if (x == a.size() && y == b.size()) {
            out.insert(make_trusted(values));
            return;
        }
        const int ai = x < a.size() ? a_by_value[x] : -1;
        const int bj = y < b.size() ? b_by_value[y] : -1;
        if (ai >= 0 && partner_of_a[ai] < 0) {
            values[point_of_a[ai]] = next;
            merge_values(x + 1, y, next + 1, values);
        }
        if (bj >= 0 && partner_of_b[bj] < 0) {
            values[point_of_b[bj]] = next;
            merge_values(x, y + 1, next + 1, values);
        }
        if (ai >= 0 && bj >= 0 && partner_of_a[ai] == bj) {
            values[point_of_a[ai]] = next;
            merge_values(x + 1, y + 1, next + 1, values);
        }
    }
};

std::vector<int> positions_by_value(const Perm& p) {
    std::vector<int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i);
    return out;
}

}  // namespace

std::vector<Perm> minimal_mergers(const Perm& a, const Perm& b) {
    if (involves(a, b)) return {a};
    if (involves(b, a)) return {b};

    std::set<Perm> merged;
    MergeContext ctx{a, b, positions_by_value(a), positions_by_value(b), merged, {},
                     std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1),
                     std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1)};
    ctx.merge_positions(0, 0);

    const Matcher ma(a), mb(b);
    std::vector<Perm> minimal;
    for (const Perm& g : merged) {
        bool is_minimal = true;
        for (std::size_t i = 0; i < g.size() && is_minimal; ++i) {
            const Perm d = delete_at(g, i);
            if (ma.occurs_in(d.values()) && mb.occurs_in(d.values())) is_minimal = false;
        }
        if (is_minimal) minimal.push_back(g);
    }
    return minimal;  // std::set iteration order is already sorted
}

}  // namespace permclass
