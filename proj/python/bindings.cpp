#include <cstdint>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permclass/class_engine.hpp"
#include "permclass/cli.hpp"
#include "permclass/periodic.hpp"
#include "permclass/rank_encoding.hpp"
#include "permclass/structure.hpp"

namespace py = pybind11;
using namespace permclass;

namespace {

using Ints = std::vector<int>;

Ints ints(const Perm& g) { return Ints(g.begin(), g.end()); }

std::vector<Ints> ints(const std::vector<Perm>& v) {
    std::vector<Ints> out;
    for (const auto& g : v) out.push_back(ints(g));
    return out;
}

std::vector<Perm> perms(const std::vector<Ints>& v) {
    std::vector<Perm> out;
    for (const auto& g : v) out.emplace_back(g);
    return out;
}

py::int_ pyint(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list pyints(const std::vector<BigInt>& v) {
    py::list out;
    for (const auto& x : v) out.append(pyint(x));
    return out;
}

py::dict genfun_dict(const GenFun& g) {
    py::dict d;
    d["num"] = pyints(g.num.coeffs());
    d["den"] = pyints(g.den.coeffs());
    d["text"] = g.str();
    return d;
}

InfinitePerm infinite(const py::object& p) {
    if (py::isinstance<PeriodicPerm>(p)) return p.cast<PeriodicPerm>();
    return RawPrefix(p.cast<Ints>());
}

ClassSource source(const py::object& x) {
    if (py::isinstance<PeriodicPerm>(x)) return x.cast<PeriodicPerm>();
    return FiniteBasisClass(perms(x.cast<std::vector<Ints>>()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Permutation classes, periodic permutations and rank encodings";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InferenceUnstable>(m, "InferenceUnstable", PyExc_RuntimeError);
    py::register_exception<HorizonError>(m, "HorizonError", PyExc_RuntimeError);

    m.def("involves", [](const Ints& host, const Ints& pattern) { return involves(Perm(host), Perm(pattern)); });
    m.def("count_occurrences", [](const Ints& pattern, const Ints& host) { return Matcher(Perm(pattern)).count_in(Perm(host).values(), SIZE_MAX); });
    m.def("flatten", [](const Ints& seq) { return ints(flatten(seq)); });
    m.def("direct_sum", [](const Ints& a, const Ints& b) { return ints(direct_sum(Perm(a), Perm(b))); });
    m.def("sum_decompose", [](const Ints& g) { return ints(sum_decompose(Perm(g))); });
    m.def("minimal_mergers", [](const Ints& a, const Ints& b) { return ints(minimal_mergers(Perm(a), Perm(b))); });

    m.def("normalize_basis", [](const std::vector<Ints>& b) { return ints(normalize_basis(perms(b)).basis()); });
    m.def("members", [](const std::vector<Ints>& b, std::size_t n) { return ints(members(FiniteBasisClass(perms(b)), n)); });
    m.def("count_profile", [](const std::vector<Ints>& b, std::size_t n) {
        return pyints(count_profile(FiniteBasisClass(perms(b)), n));
    });
    m.def("is_sum_complete", [](const std::vector<Ints>& b) { return is_sum_complete(FiniteBasisClass(perms(b))); });
    m.def("final_components", [](const std::vector<Ints>& b) { return ints(final_components(FiniteBasisClass(perms(b)))); });
    m.def(
        "atomicity_check",
        [](const std::vector<Ints>& b, std::size_t pair_len, std::size_t witness_len) {
            const auto r = atomicity_check(FiniteBasisClass(perms(b)), pair_len, witness_len);
            py::dict d;
            d["verdict"] = to_string(r.verdict);
            d["pairs_examined"] = r.pairs_examined;
            d["witness_pair"] = r.witness_pair ? py::cast(std::make_pair(ints(r.witness_pair->first), ints(r.witness_pair->second)))
                                               : py::none();
            d["decomposition"] = r.decomposition ? py::cast(std::make_pair(ints(r.decomposition->first.basis()),
                                                                          ints(r.decomposition->second.basis())))
                                                 : py::none();
            return d;
        },
        py::arg("basis"), py::arg("pair_len") = 4, py::arg("witness_len") = 8);

    py::class_<PeriodicPerm>(m, "PeriodicPerm")
        .def(py::init([](const Ints& window, std::size_t n, std::size_t p) { return make_periodic(window, n, p); }),
             py::arg("window"), py::arg("N"), py::arg("P"))
        .def("__call__", &PeriodicPerm::term)
        .def("prefix", &PeriodicPerm::prefix)
        .def_property_readonly("window", &PeriodicPerm::window)
        .def_property_readonly("N", &PeriodicPerm::start)
        .def_property_readonly("P", &PeriodicPerm::period)
        .def_property_readonly("D", &PeriodicPerm::displacement)
        .def("canonical_period", &PeriodicPerm::canonical_period)
        .def("last_boundary", &PeriodicPerm::last_boundary)
        .def("__eq__", [](const PeriodicPerm& a, const PeriodicPerm& b) { return a == b; })
        .def("__repr__", [](const PeriodicPerm& p) {
            std::ostringstream s;
            s << "PeriodicPerm(N=" << p.start() << ", P=" << p.period() << ", window=[";
            for (std::size_t i = 0; i < p.window().size(); ++i) s << (i ? ", " : "") << p.window()[i];
            s << "])";
            return s.str();
        });

    m.def("twin_oscillation", &twin_oscillation);
    m.def("increasing_oscillation", &increasing_oscillation);
    m.def("check_eventual_periodicity", [](const Ints& v) { return check_eventual_periodicity(v); });
    m.def("sub_patterns", [](const py::object& p, std::size_t k) {
        return std::visit([k](const auto& x) { return ints(sub_patterns(x, k)); }, infinite(p));
    });
    m.def("basis_up_to", [](const PeriodicPerm& p, std::size_t n) { return ints(basis_up_to(p, n)); });

    m.def("encode", [](const Ints& g) { return encode(Perm(g)); });
    m.def("decode", [](const RankWord& w) { return ints(decode(w)); });
    m.def(
        "gf",
        [](const py::object& x, std::size_t train_len) {
            const Dfa d = infer_dfa(source(x), train_len);
            py::dict out = genfun_dict(rational_gf(d));
            out["states"] = d.num_states();
            out["m"] = d.alphabet;
            return out;
        },
        py::arg("source"), py::arg("train_len") = 8);

    m.def(
        "classify",
        [](const py::object& p, const std::vector<Ints>& basis, std::size_t depth) {
            const auto r = classify(infinite(p), FiniteBasisClass(perms(basis)), depth);
            py::dict d;
            d["branch"] = to_string(r.branch);
            d["gamma"] = r.gamma ? py::cast(ints(*r.gamma)) : py::none();
            d["C"] = r.C ? py::cast(ints(*r.C)) : py::none();
            d["period"] = r.period ? py::cast(*r.period) : py::none();
            d["verified_to"] = r.verified_to;
            d["window"] = r.window;
            d["k"] = r.k;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("pi"), py::arg("basis"), py::arg("depth") = 7);

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
