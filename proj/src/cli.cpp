#include "permclass/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_io.hpp"

namespace permclass::cli {

namespace {

using json_io::json;
using json_io::to_json;

struct Options {
    std::string class_file;
    std::string pi_file;
    std::size_t max_n = 8;
    std::size_t depth = 7;
    std::size_t train_len = 8;
    std::size_t pair_len = 4;
    std::optional<std::size_t> witness_len;
    std::size_t k = 5;
    std::size_t n = 3;
    std::size_t uv_count = 20;
    std::optional<std::size_t> horizon;
    std::string perm;
    std::string word;
    std::string example;
    bool table = false;
    bool quiet = false;
};

struct Output {
    json payload;
    std::string table;  // plain-text rendering for --table
};

json envelope(const std::string& command) {
    return {{"schema", json_io::kSchema}, {"status", "ok"}, {"command", command}};
}

FiniteBasisClass load_class(const Options& o) {
    if (o.class_file.empty()) throw InvalidInput("--class FILE is required");
    return json_io::class_from_json(json_io::read_file(o.class_file));
}

InfinitePerm load_pi(const Options& o) {
    if (o.pi_file.empty()) throw InvalidInput("--pi FILE is required");
    return json_io::infinite_from_json(json_io::read_file(o.pi_file));
}

json pi_json(const InfinitePerm& p) {
    return std::visit([](const auto& x) { return to_json(x); }, p);
}

ClassSource as_source(const InfinitePerm& p) {
    return std::visit([](const auto& x) { return ClassSource(x); }, p);
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string join_counts(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
    return s;
}

std::string perm_lines(const std::vector<Perm>& perms) {
    std::string s;
    for (const auto& g : perms) s += g.compact() + "\n";
    return s;
}

Output cmd_enumerate(const Options& o, std::ostream& err) {
    const auto cls = load_class(o);
    std::vector<BigInt> counts;
    const auto levels = member_levels(cls, o.max_n);
    for (std::size_t n = 0; n < levels.size(); ++n) {
        counts.emplace_back(levels[n].size());
        if (!o.quiet) err << "enumerate: length " << n << ": " << levels[n].size() << "\n";
    }
    json p = envelope("enumerate");
    p["basis"] = to_json(cls.basis());
    p["max_n"] = o.max_n;
    p["counts"] = to_json(counts);
    std::string t;
    for (std::size_t n = 0; n < counts.size(); ++n) t += std::to_string(n) + " " + counts[n].str() + "\n";
    return {p, t};
}

Output cmd_basis(const Options& o, std::ostream& err) {
    json p = envelope("basis");
    std::vector<Perm> basis;
    if (!o.pi_file.empty()) {
        const auto pi = load_pi(o);
        const PatternLevels lv = std::visit([&](const auto& x) { return sub_pattern_levels(x, o.max_n); }, pi);
        if (!o.quiet)
            for (std::size_t k = 0; k < lv.levels.size(); ++k)
                err << "basis: length " << k << ": " << lv.levels[k].size() << " patterns\n";
        basis = basis_from_levels(lv);
        p["pi"] = pi_json(pi);
        p["window"] = lv.window;
        p["prefix_empirical"] = lv.prefix_empirical;
    } else {
        basis = load_class(o).basis();
    }
    p["basis"] = to_json(basis);
    p["complete_to"] = o.max_n;
    return {p, perm_lines(basis)};
}

Output cmd_gf(const Options& o) {
    if (o.class_file.empty() == o.pi_file.empty()) throw InvalidInput("gf needs exactly one of --class or --pi");
    json p = envelope("gf");
    ClassSource src = o.class_file.empty() ? as_source(load_pi(o)) : ClassSource(load_class(o));
    if (!o.class_file.empty())
        p["basis"] = to_json(std::get<FiniteBasisClass>(src).basis());
    else
        p["pi"] = std::visit([](const auto& x) { return to_json(x); }, src);
    const Dfa d = infer_dfa(src, o.train_len);
    const GenFun g = rational_gf(d);
    const AlphabetBound ab = alphabet_bound(src, o.train_len);
    std::vector<BigInt> counts;
    for (std::size_t n = 0; n <= o.train_len + 3; ++n) counts.push_back(count_words(d, n));
    p["train_len"] = o.train_len;
    p["alphabet"] = {{"m", ab.m}, {"stabilized", ab.stabilized}};
    p["alphabet"]["theoretical"] = ab.theoretical ? json(*ab.theoretical) : json(nullptr);
    p["dfa"] = to_json(d);
    p["gf"] = to_json(g);
    p["counts"] = to_json(counts);
    return {p, g.str() + "\n" + join_counts(counts) + "\n"};
}

Output cmd_atomic(const Options& o) {
    const auto cls = load_class(o);
    const std::size_t w = o.witness_len.value_or(2 * o.pair_len);
    const AtomicityReport r = atomicity_check(cls, o.pair_len, w);
    json p = envelope("atomic");
    p["basis"] = to_json(cls.basis());
    p["report"] = to_json(r);
    std::string t = to_string(r.verdict) + "\n";
    if (r.witness_pair) t += r.witness_pair->first.compact() + " " + r.witness_pair->second.compact() + "\n";
    return {p, t};
}

Output cmd_classify(const Options& o) {
    const auto pi = load_pi(o);
    const auto cls = load_class(o);
    const DichotomyReport r = classify(pi, cls, o.depth);
    json p = envelope("classify");
    p["pi"] = pi_json(pi);
    p["basis"] = to_json(cls.basis());
    p["report"] = to_json(r);
    std::string t = to_string(r.branch);
    if (r.gamma) t += " gamma=" + (r.gamma->size() ? r.gamma->compact() : std::string("empty"));
    if (r.period) t += " N=" + std::to_string(r.period->first) + " P=" + std::to_string(r.period->second);
    return {p, t + "\n"};
}

// Same conventions as permutation text: separated by spaces, commas or
// tabs, or one digit per letter when there are no separators.
RankWord parse_word(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '\t'; }, ' ');
    RankWord w;
    if (text.find(' ') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw InvalidInput("rank word letters must be integers, got '" + text + "'");
            w.push_back(c - '0');
        }
        return w;
    }
    std::istringstream in(text);
    for (std::string tok; in >> tok;) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidInput("rank word letters must be integers, got '" + tok + "'");
        w.push_back(v);
    }
    return w;
}

Output cmd_encode(const Options& o) {
    json p = envelope("encode");
    if (!o.word.empty()) {
        const RankWord w = parse_word(o.word);
        const Perm g = decode(w);
        p["word"] = w;
        p["perm"] = to_json(g);
        return {p, g.str() + "\n"};
    }
    if (!o.pi_file.empty()) {
        const auto pi = load_pi(o);
        p["pi"] = pi_json(pi);
        if (const auto* per = std::get_if<PeriodicPerm>(&pi)) {
            const PeriodicRankWord w = encode_periodic(*per);
            p["rank_word"] = to_json(w);
            return {p, join(w.window) + " (N=" + std::to_string(w.start) + ", P=" + std::to_string(w.period) + ")\n"};
        }
        const RankWord w = encode(std::get<RawPrefix>(pi).values);
        p["word"] = w;
        return {p, join(w) + "\n"};
    }
    if (o.perm.empty()) throw InvalidInput("encode needs a permutation, --decode WORD or --pi FILE");
    const Perm g = Perm::parse(o.perm);
    const RankWord w = encode(g);
    p["perm"] = to_json(g);
    p["word"] = w;
    return {p, join(w) + "\n"};
}

Output cmd_sub(const Options& o) {
    const auto pi = load_pi(o);
    const PatternLevels lv = std::visit([&](const auto& x) { return sub_pattern_levels(x, o.k); }, pi);
    json p = envelope("sub");
    p["pi"] = pi_json(pi);
    p["k"] = o.k;
    p["patterns"] = to_json(lv.levels[o.k]);
    p["count"] = lv.levels[o.k].size();
    p["window"] = lv.window;
    p["stabilized"] = lv.stabilized;
    p["prefix_empirical"] = lv.prefix_empirical;
    return {p, perm_lines(lv.levels[o.k])};
}

Output cmd_landmarks(const Options& o) {
    const auto pi = load_pi(o);
    const auto* per = std::get_if<PeriodicPerm>(&pi);
    if (!per) throw InvalidInput("landmarks needs a periodic permutation (window, N, P)");
    const auto cls = load_class(o);
    const std::vector<Perm> C = final_components(cls);
    const auto lm = landmarks(*per, C, o.uv_count, cls.max_basis_length(), o.horizon);
    json p = envelope("landmarks");
    p["pi"] = to_json(*per);
    p["C"] = to_json(C);
    if (!lm) {
        p["found"] = false;
        return {p, "no C-occurrence: class lies in A(C)\n"};
    }
    p["found"] = true;
    p["k"] = lm->k;
    p["l"] = lm->l;
    p["u"] = lm->u;
    p["v"] = lm->v;
    p["horizon"] = lm->horizon;
    return {p, "k=" + std::to_string(lm->k) + " l=" + std::to_string(lm->l) + "\n"};
}

Output cmd_examples(const Options& o) {
    json p = envelope("examples");
    p["example"] = o.example;
    if (o.example == "twin") {
        const PeriodicPerm t = twin_oscillation();
        p.update(to_json(t));
        std::vector<Perm> betas;
        for (std::size_t i = 1; i <= o.n; ++i) betas.push_back(twin_oscillation_basis_family(i));
        json arr = json::array();
        for (const auto& b : betas) arr.push_back(to_json(b));
        p["beta"] = arr;
        return {p, join(t.window()) + "\n" + perm_lines(betas)};
    }
    if (o.example == "oscillation") {
        const PeriodicPerm t = increasing_oscillation();
        p.update(to_json(t));
        return {p, join(t.window()) + "\n"};
    }
    if (o.example == "layered") {
        const RawPrefix r = layered_prefix(o.depth);
        p.update(to_json(r));
        return {p, join(r.values) + "\n"};
    }
    if (o.example == "growing") {
        const GrowingBlockReport r = growing_block_nonexample(o.depth);
        p["prefix"] = r.prefix;
        p["periodicity"] = r.periodicity ? json{{"N", r.periodicity->first}, {"P", r.periodicity->second}} : json(nullptr);
        json xi = json::array();
        for (const auto& g : r.xi) xi.push_back(to_json(g));
        p["xi"] = xi;
        p["embeddings"] = r.embeddings;
        p["doubled_embeds"] = r.doubled_embeds;
        p["indecomposable"] = r.indecomposable;
        return {p, join(r.prefix) + "\n"};
    }
    throw InvalidInput("unknown example '" + o.example + "' (twin, oscillation, layered, growing)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation class toolkit", "permclass"};
    app.require_subcommand(1);
    Options o;
    std::function<Output()> action;

    auto common = [&](CLI::App* sub) {
        auto* j = sub->add_flag("--json", "JSON output (default)");
        sub->add_flag("--table", o.table, "plain-text output")->excludes(j);
        sub->add_flag("--quiet", o.quiet, "no progress on standard error");
    };

    auto* enumerate = app.add_subcommand("enumerate", "count class members by length");
    enumerate->add_option("--class", o.class_file, "class JSON file")->required();
    enumerate->add_option("--max-n", o.max_n, "largest length")->capture_default_str();
    common(enumerate);
    enumerate->callback([&] { action = [&] { return cmd_enumerate(o, err); }; });

    auto* basis = app.add_subcommand("basis", "basis elements of Sub(pi) or a normalized class basis");
    auto* b_pi = basis->add_option("--pi", o.pi_file, "permutation JSON file");
    basis->add_option("--class", o.class_file, "class JSON file")->excludes(b_pi);
    basis->add_option("--max-n", o.max_n, "largest length")->capture_default_str();
    common(basis);
    basis->callback([&] { action = [&] { return cmd_basis(o, err); }; });

    auto* gf = app.add_subcommand("gf", "automaton and rational generating function");
    gf->add_option("--class", o.class_file, "class JSON file");
    gf->add_option("--pi", o.pi_file, "permutation JSON file");
    gf->add_option("--train-len", o.train_len, "sample length for inference")->capture_default_str();
    common(gf);
    gf->callback([&] { action = [&] { return cmd_gf(o); }; });

    auto* atomic = app.add_subcommand("atomic", "atomicity check");
    atomic->add_option("--class", o.class_file, "class JSON file")->required();
    atomic->add_option("--pair-len", o.pair_len, "longest member in a tested pair")->capture_default_str();
    atomic->add_option("--witness-len", o.witness_len, "longest common superpattern searched (default 2*pair-len)");
    common(atomic);
    atomic->callback([&] { action = [&] { return cmd_atomic(o); }; });

    auto* cls = app.add_subcommand("classify", "sum-form or periodic branch");
    cls->add_option("--pi", o.pi_file, "permutation JSON file")->required();
    cls->add_option("--class", o.class_file, "basis of Sub(pi), at least up to --depth")->required();
    cls->add_option("--depth", o.depth, "lengths checked")->capture_default_str();
    common(cls);
    cls->callback([&] { action = [&] { return cmd_classify(o); }; });

    auto* enc = app.add_subcommand("encode", "rank encoding of a permutation");
    enc->add_option("perm", o.perm, "permutation, e.g. 3142 or \"3 1 4 2\"");
    enc->add_option("--decode", o.word, "rank word to decode, e.g. \"1 2 1 3\"");
    enc->add_option("--pi", o.pi_file, "encode an infinite permutation");
    common(enc);
    enc->callback([&] { action = [&] { return cmd_encode(o); }; });

    auto* sub = app.add_subcommand("sub", "length-k patterns of pi");
    sub->add_option("--pi", o.pi_file, "permutation JSON file")->required();
    sub->add_option("-k", o.k, "pattern length")->capture_default_str();
    common(sub);
    sub->callback([&] { action = [&] { return cmd_sub(o); }; });

    auto* lm = app.add_subcommand("landmarks", "k, l and the U/V sequences");
    lm->add_option("--pi", o.pi_file, "periodic permutation JSON file")->required();
    lm->add_option("--class", o.class_file, "basis whose final components form C")->required();
    lm->add_option("--uv-count", o.uv_count, "terms of U and V")->capture_default_str();
    lm->add_option("--horizon", o.horizon, "initial search horizon");
    common(lm);
    lm->callback([&] { action = [&] { return cmd_landmarks(o); }; });

    auto* ex = app.add_subcommand("examples", "built-in permutations: twin, oscillation, layered, growing");
    ex->add_option("name", o.example, "example name")->required();
    ex->add_option("--n", o.n, "twin: number of basis family members")->capture_default_str();
    ex->add_option("--depth", o.depth, "layered/growing: prefix length")->capture_default_str();
    common(ex);
    ex->callback([&] {
        if (o.example == "layered" || o.example == "growing")
            if (ex->count("--depth") == 0) o.depth = 40;
        action = [&] { return cmd_examples(o); };
    });

    std::vector<std::string> argv_store{"permclass"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    std::string command;
    for (const auto* s : app.get_subcommands()) command = s->get_name();
    try {
        Output result = action();
        if (o.table)
            out << result.table;
        else
            out << result.payload.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        json p = {{"schema", json_io::kSchema}, {"status", "error"}, {"command", command}};
        p["diagnostics"] = json::array({e.what()});
        if (!o.table) out << p.dump(2) << "\n";
        err << "permclass " << command << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace permclass::cli
