// Python bindings for the core operations: word statistics, RSK, the
// series-valued inductions, sieving checks, and the verification suite.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "cyclesieve/checks.hpp"
#include "cyclesieve/csp.hpp"
#include "cyclesieve/lie.hpp"
#include "cyclesieve/symfunc.hpp"
#include "cyclesieve/tableau.hpp"
#include "cyclesieve/word.hpp"

namespace py = pybind11;
using namespace cyclesieve;

namespace {

py::tuple to_py(const Partition& p) {
    py::tuple t(p.length());
    for (int i = 0; i < p.length(); ++i) t[static_cast<size_t>(i)] = p.part(i);
    return t;
}

py::dict schur_dict(const SymFunc& f) {
    py::dict d;
    SymFunc s = convert(f, Basis::Schur);  // keep alive: coeffs() is a view
    for (const auto& [lam, c] : s.coeffs())
        d[to_py(lam)] = to_integer(c).convert_to<long long>();
    return d;
}

py::list tuple_to_py(const PartitionTuple& t) {
    py::list out;
    for (const auto& p : t.entries()) out.append(to_py(p));
    return out;
}

Partition partition_from(const std::vector<int>& parts) {
    return Partition::from_unsorted(parts);
}

PartitionTuple tuple_from(const std::vector<std::vector<int>>& entries) {
    std::vector<Partition> ps;
    ps.reserve(entries.size());
    for (const auto& e : entries) ps.push_back(partition_from(e));
    return PartitionTuple(std::move(ps));
}

SchockerKind kind_from(const std::string& kind) {
    if (kind == "trivial") return SchockerKind::Trivial;
    if (kind == "sign") return SchockerKind::Sign;
    throw std::invalid_argument("kind must be 'trivial' or 'sign'");
}

}  // namespace

PYBIND11_MODULE(_cyclesieve, m) {
    m.doc() = "Exact cyclic-sieving and symmetric-function toolkit";

    // --- word statistics ---------------------------------------------------
    m.def("descent_set", [](const std::vector<int>& w) { return descent_set(w); },
          py::arg("word"), "1-based descent positions of a word.");
    m.def("maj", [](const std::vector<int>& w) { return maj(w); }, py::arg("word"),
          "Sum of the descent positions.");
    m.def("maj_n", [](const std::vector<int>& w) { return maj_n(w); }, py::arg("word"),
          "maj reduced mod the length into {1..n}.");
    m.def("flex", [](const std::vector<int>& w) { return flex(w); }, py::arg("word"),
          "Frequency times lexicographic rotation rank.");
    m.def("content", [](const std::vector<int>& w) { return content(w); }, py::arg("word"),
          "Letter multiplicities up to the largest letter.");

    // --- tableaux ------------------------------------------------------------
    m.def(
        "rsk",
        [](const std::vector<int>& w) {
            auto [p, q] = rsk(std::span<const int>(w));
            return py::make_tuple(p.rows(), q.rows());
        },
        py::arg("word"), "Row insertion; returns (P rows, Q rows).");
    m.def(
        "rsk_shape",
        [](const std::vector<int>& w) { return to_py(rsk_shape(std::span<const int>(w))); },
        py::arg("word"), "Common shape of the insertion and recording tableaux.");

    // --- series ---------------------------------------------------------------
    m.def(
        "kw",
        [](int n) {
            py::list out;
            for (const auto& f : kw_series(n)) out.append(schur_dict(f));
            return out;
        },
        py::arg("n"),
        "Schur expansions of the full-cycle induction series, index r-1.");
    m.def(
        "stembridge",
        [](const std::vector<int>& nu) {
            py::list out;
            for (const auto& f : stembridge_series(nu)) out.append(schur_dict(f));
            return out;
        },
        py::arg("nu"), "Branching series for the cyclic subgroup of type nu.");
    m.def(
        "schocker",
        [](int a, int b, int r, const std::string& kind) {
            return schur_dict(schocker(a, b, r, kind_from(kind)));
        },
        py::arg("a"), py::arg("b"), py::arg("r") = 1, py::arg("kind") = "trivial",
        "One-dimensional wreath induction expansion.");
    m.def(
        "wreath",
        [](int a, const std::vector<std::vector<int>>& ul) {
            return schur_dict(wreath_char(a, tuple_from(ul)));
        },
        py::arg("a"), py::arg("ul"), "Induced wreath module characteristic.");
    m.def(
        "wreath_dim",
        [](const std::vector<std::vector<int>>& ul) {
            return wreath_dim(tuple_from(ul)).convert_to<long long>();
        },
        py::arg("ul"), "Dimension of the irreducible wreath module.");
    m.def(
        "lie",
        [](const std::vector<int>& lam) { return schur_dict(higher_lie(partition_from(lam))); },
        py::arg("cycle_type"), "Higher Lie characteristic of a cycle type.");

    // --- tuple statistics ------------------------------------------------------
    m.def(
        "flex_tuple",
        [](const std::vector<int>& w, int a, int b) {
            return tuple_to_py(flex_ab(std::span<const int>(w), a, b));
        },
        py::arg("word"), py::arg("a"), py::arg("b"),
        "Blockwise flex bucket shapes, one slot per value in [a].");
    m.def(
        "maj_tuple",
        [](const std::vector<int>& w, int a, int b) {
            return tuple_to_py(maj_ab(std::span<const int>(w), a, b));
        },
        py::arg("word"), py::arg("a"), py::arg("b"),
        "Blockwise maj bucket shapes, one slot per value in [a].");

    // --- sieving -----------------------------------------------------------------
    m.def(
        "csp_content_class",
        [](const std::vector<int>& alpha, const std::string& stat) {
            int n = 0;
            for (int v : alpha) n += v;
            WordStat fn;
            if (stat == "maj")
                fn = [](std::span<const int> w) { return maj(w); };
            else if (stat == "majn")
                fn = [](std::span<const int> w) { return maj_n(w); };
            else if (stat == "flex")
                fn = [](std::span<const int> w) { return flex(w); };
            else
                throw std::invalid_argument("stat must be 'maj', 'majn' or 'flex'");
            CSPReport report = verify_csp(enumerate_words_by_content(alpha), n, fn);
            py::dict out;
            out["holds"] = report.holds;
            out["order"] = report.order;
            py::dict profile;
            for (const auto& [size, count] : report.orbit_profile)
                profile[py::int_(size)] = count;
            out["orbit_profile"] = profile;
            if (report.witness) {
                py::dict w;
                w["r"] = report.witness->r;
                w["fixed_count"] = report.witness->fixed_count.convert_to<long long>();
                w["value_integral"] = report.witness->value_integral;
                if (report.witness->value_integral)
                    w["value"] = report.witness->value.convert_to<long long>();
                out["witness"] = w;
            }
            return out;
        },
        py::arg("alpha"), py::arg("stat") = "maj",
        "Check the sieving phenomenon on one content class.");

    // --- verification ---------------------------------------------------------------
    m.def(
        "verify",
        [](int max_n) {
            py::list out;
            for (const auto& r : run_all_checks(VerifyCaps::capped(max_n)))
                out.append(py::make_tuple(r.name, r.pass, r.detail));
            return out;
        },
        py::arg("max_n") = 6, "Run the identity suite; returns (name, pass, detail) triples.");
}
