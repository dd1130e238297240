#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbonmod/cli.hpp"
#include "ribbonmod/errors.hpp"
#include "ribbonmod/moduli.hpp"
#include "ribbonmod/report.hpp"
#include "ribbonmod/stability.hpp"

namespace py = pybind11;
using namespace ribbonmod;

PYBIND11_MODULE(_ribbonmod, m) {
    m.doc() = "Exact invariants, existence predicates and dimension formulas for sheaves on ribbons";

    static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<IntegralityError> integrality_error(m, "IntegralityError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            py::set_error(domain_error, e.what());
        } catch (const IntegralityError& e) {
            py::set_error(integrality_error, e.what());
        }
    });

    py::class_<Fraction>(m, "Fraction")
        .def(py::init<Int, Int>(), py::arg("numerator"), py::arg("denominator") = 1)
        .def_property_readonly("numerator", &Fraction::numerator)
        .def_property_readonly("denominator", &Fraction::denominator)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def("__str__", &Fraction::to_string)
        .def("__repr__", [](const Fraction& f) { return "Fraction(" + f.to_string() + ")"; })
        .def("__hash__", [](const Fraction& f) { return py::hash(py::make_tuple(f.numerator(), f.denominator())); });

    py::class_<RibbonParams>(m, "RibbonParams")
        .def(py::init<Int, Int>(), py::arg("gbar"), py::arg("delta"))
        .def_static("from_deg_n", &RibbonParams::from_deg_n, py::arg("gbar"), py::arg("deg_n"))
        .def_readonly("gbar", &RibbonParams::gbar)
        .def_readonly("delta", &RibbonParams::delta)
        .def_property_readonly("deg_n", &RibbonParams::deg_n)
        .def_property_readonly("genus", &RibbonParams::genus)
        .def(py::self == py::self)
        .def("__repr__", [](const RibbonParams& p) {
            return "RibbonParams(gbar=" + std::to_string(p.gbar) + ", delta=" + std::to_string(p.delta) + ")";
        });

    py::class_<CompleteType>(m, "CompleteType")
        .def(py::init<Int, Int, Int, Int>(), py::arg("r0"), py::arg("r1"), py::arg("d0"), py::arg("d1"))
        .def_readonly("r0", &CompleteType::r0)
        .def_readonly("r1", &CompleteType::r1)
        .def_readonly("d0", &CompleteType::d0)
        .def_readonly("d1", &CompleteType::d1)
        .def(py::self == py::self)
        .def("__repr__", [](const CompleteType& c) {
            std::ostringstream os;
            os << "CompleteType((" << c.r0 << ", " << c.r1 << "), (" << c.d0 << ", " << c.d1 << "))";
            return os.str();
        });

    py::class_<LocalType>(m, "LocalType")
        .def(py::init<Int, Int>(), py::arg("a"), py::arg("b"))
        .def_readonly("a", &LocalType::a)
        .def_readonly("b", &LocalType::b)
        .def(py::self == py::self);

    py::class_<Invariants>(m, "Invariants")
        .def(py::init<Int, Int>(), py::arg("R"), py::arg("D"))
        .def_readonly("R", &Invariants::R)
        .def_readonly("D", &Invariants::D)
        .def(py::self == py::self)
        .def("__repr__", [](const Invariants& i) {
            return "Invariants(R=" + std::to_string(i.R) + ", D=" + std::to_string(i.D) + ")";
        });

    py::class_<ExistenceVerdict>(m, "ExistenceVerdict")
        .def_readonly("semistable_exists", &ExistenceVerdict::semistable_exists)
        .def_readonly("stable_exists", &ExistenceVerdict::stable_exists)
        .def(py::self == py::self);

    py::enum_<Rank3Verdict>(m, "Rank3Verdict")
        .value("Stable", Rank3Verdict::Stable)
        .value("StrictlySemistable", Rank3Verdict::StrictlySemistable)
        .value("NoSemistable", Rank3Verdict::NoSemistable);

    py::enum_<DeformVerdict>(m, "DeformVerdict")
        .value("Deforms", DeformVerdict::Deforms)
        .value("PossibleException", DeformVerdict::PossibleException)
        .value("HypothesesFail", DeformVerdict::HypothesesFail);

    py::enum_<ComponentKind>(m, "ComponentKind")
        .value("QlfCompleteType", ComponentKind::QlfCompleteType)
        .value("GeneralizedVectorBundle", ComponentKind::GeneralizedVectorBundle)
        .value("RigidType", ComponentKind::RigidType)
        .value("VectorBundleOnReduced", ComponentKind::VectorBundleOnReduced);

    py::class_<ComponentDescriptor>(m, "ComponentDescriptor")
        .def_readonly("kind", &ComponentDescriptor::kind)
        .def_readonly("type", &ComponentDescriptor::type)
        .def_readonly("index", &ComponentDescriptor::index)
        .def_readonly("dimension", &ComponentDescriptor::dimension)
        .def_readonly("existence", &ComponentDescriptor::existence);

    py::class_<PartitionSpec>(m, "PartitionSpec")
        .def(py::init<std::vector<Int>>(), py::arg("parts"))
        .def_property_readonly("parts", &PartitionSpec::parts)
        .def_property_readonly("total", &PartitionSpec::total)
        .def_property_readonly("length", &PartitionSpec::length);

    // lemmas
    m.def("ribbon_genus", &ribbon_genus);
    m.def("invariants_of", &invariants_of);
    m.def("slope", py::overload_cast<const Invariants&>(&slope));
    m.def("euler_characteristic", &euler_characteristic);
    m.def("hilbert_polynomial", [](const Invariants& inv, const RibbonParams& p, Int d) {
        auto h = hilbert_polynomial(inv, p, d);
        return py::make_tuple(h.constant, h.linear);
    });
    m.def("classical_invariants", [](const Invariants& inv, const RibbonParams& p) {
        auto c = classical_invariants(inv, p);
        return py::make_tuple(c.rank, c.degree);
    });
    m.def("dual_invariants", &dual_invariants, py::arg("inv"), py::arg("p"), py::arg("torsion_sections") = 0);
    m.def("vector_bundle_invariants", &vector_bundle_invariants);
    m.def("vb_parity_ok", py::overload_cast<Int, Int, const RibbonParams&>(&vb_parity_ok));
    m.def("gvb_complete_type", &gvb_complete_type, py::arg("r"), py::arg("D"), py::arg("b"), py::arg("p"));
    m.def("local_type_to_rank_pair", &local_type_to_rank_pair);
    m.def("rank_pair_to_local_type", &rank_pair_to_local_type);

    // stability
    m.def("ss_qlf_exists", &ss_qlf_exists);
    m.def("rigid_locus_nonempty", &rigid_locus_nonempty);
    m.def("gvb_ss_exists", &gvb_ss_exists);
    m.def("stable_index_bound", &stable_index_bound);
    m.def("L_locus_nonempty", &L_locus_nonempty);
    m.def("rank3_rational_classify", &rank3_rational_classify);
    m.def("vb_deforms_to_ribbon", &vb_deforms_to_ribbon);
    m.def("deformation_target_type", &deformation_target_type);
    m.def("lemma_weight_check", [](std::array<Int, 3> mm, std::array<Int, 3> mp, std::array<Fraction, 3> q,
                                   std::array<Fraction, 3> qp) {
        auto c = lemma_weight_check(LemmaWeightData(mm, mp, q, qp));
        return py::make_tuple(c.hypotheses, c.w, c.w_prime);
    });
    m.def("verify_lemmas", [](std::uint64_t samples, std::uint64_t seed) {
        py::dict out;
        auto pack = [](const LemmaSampleReport& r) {
            py::dict d;
            d["samples"] = r.samples;
            d["violations"] = r.violations;
            d["strict_violations"] = r.strict_violations;
            d["strict_cases"] = r.strict_cases;
            d["ok"] = r.ok();
            return d;
        };
        out["slope_mu2ge3"] = pack(sample_slope_lemma(samples, seed, SlopeVariant::Mu2Ge3));
        out["slope_mu5ge6"] = pack(sample_slope_lemma(samples, seed, SlopeVariant::Mu5Ge6));
        out["weight"] = pack(sample_weight_lemma(samples, seed));
        return out;
    });

    // moduli
    m.def("dim_qlf_locus", &dim_qlf_locus);
    m.def("dim_rigid_locus", &dim_rigid_locus);
    m.def("dim_vb_locus", [](Int r, Int D, const RibbonParams& p) {
        auto v = dim_vb_locus(r, D, p);
        return py::make_tuple(v.nonempty, v.dimension);
    });
    m.def("dim_gvb_locus", &dim_gvb_locus);
    m.def("blowup", &blowup);
    m.def("dim_L_locus", &dim_L_locus);
    m.def("dim_L_stratum", &dim_L_stratum);
    m.def("partitions", &partitions);
    m.def("partition_count", &partition_count);
    m.def("may_specialize", &may_specialize);
    m.def(
        "enumerate_components",
        [](const RibbonParams& p, Int R, Int D, bool include_index_zero, bool include_possible_exception,
           unsigned jobs) {
            EnumerateOptions opt;
            opt.include_index_zero = include_index_zero;
            opt.include_possible_exception = include_possible_exception;
            opt.jobs = jobs;
            py::gil_scoped_release release;
            return enumerate_components(p, R, D, opt);
        },
        py::arg("p"), py::arg("R"), py::arg("D"), py::arg("include_index_zero") = false,
        py::arg("include_possible_exception") = false, py::arg("jobs") = 1);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run the command line front end in-process; returns (exit_code, stdout, stderr).");
}
