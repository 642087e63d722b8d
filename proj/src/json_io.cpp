#include "json_io.hpp"

#include <fstream>
#include <limits>

namespace permclass::json_io {

json to_json(const Perm& g) { return json(std::vector<int>(g.begin(), g.end())); }

json to_json(const std::vector<Perm>& perms) {
    json out = json::array();
    for (const auto& g : sorted_unique(perms)) out.push_back(to_json(g));
    return out;
}

json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}

json to_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    if (out.empty()) out.push_back(0);
    return out;
}

json to_json(const GenFun& g) { return {{"num", to_json(g.num)}, {"den", to_json(g.den)}, {"text", g.str()}}; }

json to_json(const FiniteBasisClass& c) { return {{"basis", to_json(c.basis())}}; }

json to_json(const PeriodicPerm& p) {
    return {{"window", p.window()}, {"N", p.start()}, {"P", p.period()}, {"D", p.displacement()}};
}

json to_json(const RawPrefix& p) { return {{"prefix", p.values}}; }

json to_json(const Dfa& d) {
    return {{"states", d.num_states()}, {"m", d.alphabet}, {"start", d.start}, {"dead", d.dead}, {"delta", d.delta}};
}

json to_json(const AtomicityReport& r) {
    json out = {{"verdict", to_string(r.verdict)},
                {"pair_len", r.pair_len},
                {"witness_len", r.witness_len},
                {"pairs_examined", r.pairs_examined},
                {"mergers", to_json(r.mergers)}};
    out["witness_pair"] = r.witness_pair ? json::array({to_json(r.witness_pair->first), to_json(r.witness_pair->second)})
                                         : json(nullptr);
    out["decomposition"] = r.decomposition
                               ? json::array({to_json(r.decomposition->first), to_json(r.decomposition->second)})
                               : json(nullptr);
    return out;
}

json to_json(const DichotomyReport& r) {
    json out = {{"branch", to_string(r.branch)},
                {"verified_to", r.verified_to},
                {"window", r.window},
                {"k", r.k},
                {"notes", r.notes}};
    out["gamma"] = r.gamma ? to_json(*r.gamma) : json(nullptr);
    out["C"] = r.C ? to_json(*r.C) : json(nullptr);
    out["period"] = r.period ? json{{"N", r.period->first}, {"P", r.period->second}} : json(nullptr);
    return out;
}

json to_json(const PeriodicRankWord& w) { return {{"window", w.window}, {"N", w.start}, {"P", w.period}}; }

Perm perm_from_json(const json& j) {
    if (j.is_string()) return Perm::parse(j.get<std::string>());
    if (!j.is_array()) throw InvalidInput("expected a permutation as an array or string");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput("permutation entries must be integers");
        v.push_back(x.get<int>());
    }
    return Perm(std::move(v));
}

FiniteBasisClass class_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.at("basis").is_array())
        throw InvalidInput("class file needs a \"basis\" array");
    std::vector<Perm> basis;
    for (const auto& g : j.at("basis")) basis.push_back(perm_from_json(g));
    return FiniteBasisClass(std::move(basis));
}

namespace {

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput(std::string(what) + " must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::size_t positive(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 1)
        throw InvalidInput(std::string(what) + " must be a positive integer");
    return j.get<std::size_t>();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InvalidInput("expected an integer");
}

}  // namespace

InfinitePerm infinite_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("permutation file must be a JSON object");
    if (j.contains("window")) {
        if (!j.contains("N") || !j.contains("P")) throw InvalidInput("periodic permutation needs \"N\" and \"P\"");
        return PeriodicPerm(int_array(j.at("window"), "window"), positive(j.at("N"), "N"), positive(j.at("P"), "P"));
    }
    if (j.contains("prefix")) return RawPrefix(int_array(j.at("prefix"), "prefix"));
    throw InvalidInput("permutation file needs \"window\"/\"N\"/\"P\" or \"prefix\"");
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("polynomial must be an array of coefficients");
    std::vector<BigInt> c;
    for (const auto& x : j) c.push_back(bigint_from_json(x));
    return Poly(std::move(c));
}

GenFun genfun_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw InvalidInput("generating function needs \"num\" and \"den\"");
    return GenFun::normalized(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Dfa dfa_from_json(const json& j) {
    Dfa d;
    try {
        d.alphabet = j.at("m").get<std::size_t>();
        d.start = j.at("start").get<std::size_t>();
        d.dead = j.at("dead").get<std::size_t>();
        d.delta = j.at("delta").get<std::vector<std::vector<std::size_t>>>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed automaton: ") + e.what());
    }
    const std::size_t n = d.delta.size();
    if (d.start >= n || d.dead >= n) throw InvalidInput("automaton start or dead state out of range");
    for (const auto& row : d.delta) {
        if (row.size() != d.alphabet) throw InvalidInput("automaton transition row has the wrong width");
        for (std::size_t t : row)
            if (t >= n) throw InvalidInput("automaton transition target out of range");
    }
    for (std::size_t t : d.delta[d.dead])
        if (t != d.dead) throw InvalidInput("dead state must absorb every letter");
    return d;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

}  // namespace permclass::json_io
