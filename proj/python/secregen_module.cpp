#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secregen/builders.hpp"
#include "secregen/descriptor.hpp"
#include "secregen/simulator.hpp"
#include "secregen/tradeoff.hpp"
#include "secregen/verify.hpp"

namespace py = pybind11;
using namespace secregen;

namespace {

py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num(), r.den());
}

Rational from_fraction(const py::object& obj) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object f = fraction(obj);
    return Rational(f.attr("numerator").cast<std::int64_t>(),
                    f.attr("denominator").cast<std::int64_t>());
}

py::dict leakage_dict(const LeakageReport& rep) {
    py::dict d;
    d["nodes"] = rep.nodes;
    d["leakage"] = rep.leakage;
    d["view_rank"] = rep.view_rank;
    d["key_rank"] = rep.key_rank;
    d["secure"] = rep.secure;
    return d;
}

LinearDssCode construct(const std::string& name, std::uint32_t n, std::uint32_t k,
                        std::uint32_t d, std::uint32_t l, std::uint64_t field) {
    BuilderRequest req;
    req.n = n; req.k = k; req.d = d; req.l = l; req.field_order = field;
    return build_by_name(name, req);
}

} // namespace

PYBIND11_MODULE(_secregen, m) {
    m.doc() = "wiretap-secure exact-repair storage codes: constructions, exact "
              "leakage verification, capacity bounds, simulation";

    py::class_<DssParams>(m, "DssParams")
        .def_readonly("n", &DssParams::n)
        .def_readonly("k", &DssParams::k)
        .def_readonly("d", &DssParams::d)
        .def_readonly("alpha", &DssParams::alpha)
        .def_readonly("beta", &DssParams::beta)
        .def_readonly("B", &DssParams::file_size)
        .def_readonly("R", &DssParams::key_size)
        .def_readonly("l", &DssParams::l)
        .def_property_readonly("attack",
                               [](const DssParams& p) { return attack_name(p.attack); });

    py::class_<LinearDssCode>(m, "Code")
        .def_property_readonly("params", &LinearDssCode::params)
        .def_property_readonly("builder", &LinearDssCode::builder)
        .def_property_readonly("field_order",
                               [](const LinearDssCode& c) { return c.field().order(); })
        .def("generator_rows",
             [](const LinearDssCode& c) {
                 std::vector<std::vector<Elem>> rows;
                 for (std::size_t r = 0; r < c.generator().rows(); ++r)
                     rows.push_back(c.generator().row(r));
                 return rows;
             })
        .def("to_json", &code_to_json)
        .def("verify_mds", [](const LinearDssCode& c) { return verify_mds(c).pass; })
        .def("verify_exact_repair",
             [](const LinearDssCode& c) { return verify_exact_repair(c).pass; })
        .def(
            "verify_secrecy",
            [](const LinearDssCode& c, const std::string& attack, std::uint32_t l) {
                SecrecyCheck check = verify_secrecy(c, attack_from_name(attack), l);
                py::dict d;
                d["pass"] = check.pass;
                d["worst"] = leakage_dict(check.worst);
                py::list subsets;
                for (const LeakageReport& r : check.subsets) subsets.append(leakage_dict(r));
                d["subsets"] = subsets;
                return d;
            },
            py::arg("attack"), py::arg("l"))
        .def(
            "leakage",
            [](const LinearDssCode& c, const std::string& attack,
               const std::vector<std::uint32_t>& nodes) {
                return leakage_dict(leakage_rank(c, wiretap_view(c, attack_from_name(attack), nodes)));
            },
            py::arg("attack"), py::arg("nodes"))
        .def(
            "leakage_exhaustive",
            [](const LinearDssCode& c, const std::string& attack,
               const std::vector<std::uint32_t>& nodes, std::uint64_t budget) {
                WiretapView v = wiretap_view(c, attack_from_name(attack), nodes);
                return to_fraction(leakage_exhaustive(c, v, budget));
            },
            py::arg("attack"), py::arg("nodes"), py::arg("budget") = (1ull << 24));

    m.def("construct", &construct, "build a named code, verification-gated",
          py::arg("name"), py::arg("n") = 0, py::arg("k") = 0, py::arg("d") = 0,
          py::arg("l") = 0, py::arg("field") = 0);
    m.def("builder_names", &builder_names);
    m.def("parse_code", &code_from_json, "parse a descriptor, re-running the gate",
          py::arg("json_text"));

    m.def(
        "functional_capacity",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t d, const py::object& alpha,
           const py::object& beta) {
            return to_fraction(functional_capacity(n, k, d, from_fraction(alpha), from_fraction(beta)));
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "secure_capacity_bound",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l,
           const py::object& alpha, const py::object& beta) {
            return to_fraction(
                secure_capacity_bound(n, k, d, l, from_fraction(alpha), from_fraction(beta)));
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("l"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "mbr_secure_capacity",
        [](std::uint32_t k, std::uint32_t d, std::uint32_t l, const py::object& beta) {
            return to_fraction(mbr_secure_capacity(k, d, l, from_fraction(beta)));
        },
        py::arg("k"), py::arg("d"), py::arg("l"), py::arg("beta"));
    m.def(
        "theorem_bound",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l,
           const std::string& attack, const py::object& alpha, const py::object& beta) {
            TradeoffQuery q;
            q.n = n; q.k = k; q.d = d; q.l = l;
            q.attack = attack_from_name(attack);
            q.alpha = from_fraction(alpha);
            q.beta = from_fraction(beta);
            BoundResult r = theorem_bound(q);
            py::dict out;
            out["value"] = to_fraction(r.value);
            out["source"] = bound_source_name(r.source);
            out["tight"] = r.tight;
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("l"), py::arg("attack"),
        py::arg("alpha"), py::arg("beta"));
    m.def(
        "region_corners",
        [](std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t l,
           const std::string& attack) {
            auto form = theorem_form(n, k, d, l, attack_from_name(attack));
            if (!form) throw std::invalid_argument("tuple not covered by a proven bound");
            py::list out;
            for (const RegionPoint& p : region_corners(*form, d))
                out.append(py::make_tuple(to_fraction(p.alpha_bar), to_fraction(p.beta_bar),
                                          p.label));
            return out;
        },
        py::arg("n"), py::arg("k"), py::arg("d"), py::arg("l"), py::arg("attack"));

    py::class_<AdversaryTranscript>(m, "Transcript")
        .def_property_readonly("attack",
                               [](const AdversaryTranscript& t) { return attack_name(t.attack); })
        .def_readonly("nodes", &AdversaryTranscript::nodes)
        .def_readonly("values", &AdversaryTranscript::values)
        .def_readonly("matches_declared_l", &AdversaryTranscript::matches_declared_l);

    py::class_<SimState>(m, "Sim")
        .def(py::init<const LinearDssCode&, std::uint64_t>(), py::arg("code"), py::arg("seed"),
             py::keep_alive<1, 2>())
        .def_property_readonly("file", &SimState::file)
        .def_property_readonly("keys", &SimState::keys)
        .def("node_contents", &SimState::node_contents, py::arg("node"))
        .def("fail_and_repair", &SimState::fail_and_repair, py::arg("node"))
        .def("reconstruct", &SimState::reconstruct, py::arg("nodes"))
        .def(
            "wiretap",
            [](SimState& s, const std::string& attack, const std::vector<std::uint32_t>& nodes) {
                return s.wiretap(attack_from_name(attack), nodes);
            },
            py::arg("attack"), py::arg("nodes"))
        .def("disk_reads_total", &SimState::disk_reads_total)
        .def("export_events", &SimState::export_events);

    m.attr("__version__") = kArtifactVersion;
}
