#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lashlab/braidkit.hpp"
#include "lashlab/contfrac.hpp"
#include "lashlab/family.hpp"
#include "lashlab/surgdesc.hpp"
#include "lashlab/traintrack.hpp"
#include "lashlab/twistcalc.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// lashlab::Int <-> arbitrary-precision python int, via decimal strings
template <>
struct type_caster<lashlab::Int> {
    PYBIND11_TYPE_CASTER(lashlab::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        PyObject* s = PyObject_Str(src.ptr());
        if (!s)
            return false;
        const char* text = PyUnicode_AsUTF8(s);
        bool ok = text != nullptr;
        if (ok) {
            try {
                value = lashlab::Int(text);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        Py_DECREF(s);
        return ok;
    }

    static handle cast(const lashlab::Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

using namespace lashlab;

ExpansionStyle style_from_string(const std::string& s) {
    if (s == "alternating-nonnegative")
        return ExpansionStyle::AlternatingNonnegative;
    if (s == "odd-length")
        return ExpansionStyle::OddLength;
    throw std::invalid_argument(
        "style must be 'alternating-nonnegative' or 'odd-length'");
}

SurgeryVariant variant_from_string(const std::string& s) {
    if (s == "S3")
        return SurgeryVariant::S3;
    if (s == "S1xS2")
        return SurgeryVariant::S1xS2;
    throw std::invalid_argument("variant must be 'S3' or 'S1xS2'");
}

LashingParams make_params(const std::vector<Int>& a, const Int& m, const Int& p,
                          const Int& q) {
    return LashingParams(a, m, p, q);
}

} // namespace

PYBIND11_MODULE(_lashlab, mod) {
    mod.doc() = "Exact invariants of lashing families and their alternating surgeries";

    py::class_<Slope>(mod, "Slope")
        .def(py::init<Int, Int>(), py::arg("num"), py::arg("den"))
        .def_property_readonly("num", [](const Slope& s) { return s.num(); })
        .def_property_readonly("den", [](const Slope& s) { return s.den(); })
        .def("is_infinite", &Slope::is_infinite)
        .def("__str__", &Slope::str)
        .def("__repr__", [](const Slope& s) { return "Slope(" + s.str() + ")"; })
        .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
        .def("__neg__", [](const Slope& s) { return -s; })
        .def("__hash__",
             [](const Slope& s) { return py::hash(py::make_tuple(s.num().str(), s.den().str())); });

    mod.def("cf_eval", [](const std::vector<Int>& coeffs) {
        return cf_eval(ContinuedFraction{coeffs});
    });
    mod.def("cf_expand", [](const Slope& s, const std::string& style) {
        return cf_expand(s, style_from_string(style)).coeffs;
    }, py::arg("slope"), py::arg("style") = "alternating-nonnegative");
    mod.def("montesinos_triple", [](const Slope& s) {
        MontesinosTriple t = montesinos_triple(s);
        return py::make_tuple(t.nu, t.mu, t.lambda);
    });
    mod.def("montesinos_triple_cf", [](const Slope& s) {
        auto [minus_p, minus_q] = montesinos_triple_cf(s);
        return py::make_tuple(minus_p.coeffs, minus_q.coeffs);
    });

    mod.def("twist_matrix", [](const std::vector<Int>& coeffs) {
        Mat2 m = twist_matrix(TwistWord(coeffs));
        return py::make_tuple(py::make_tuple(m.a, m.b), py::make_tuple(m.c, m.d));
    });
    mod.def("twist_slope", [](const std::vector<Int>& coeffs) {
        return twist_slope(TwistWord(coeffs));
    });
    mod.def("twist_family_slope", [](std::pair<Int, Int> K, std::pair<Int, Int> L, Int N) {
        CurveClass out = twist_family_slope(CurveClass(K.first, K.second),
                                            CurveClass(L.first, L.second), N);
        return py::make_tuple(out.mu_coeff(), out.lambda_coeff());
    });
    mod.def("intersection_profile",
            [](std::pair<Int, Int> K, std::pair<Int, Int> L, Int n) {
                IntersectionProfile pr = intersection_profile(
                    CurveClass(K.first, K.second), CurveClass(L.first, L.second), n);
                return py::make_tuple(pr.delta_mu, pr.delta_lambda, pr.delta_nu);
            });
    mod.def("stability_threshold",
            [](std::pair<Int, Int> K, std::pair<Int, Int> L, Int bound) {
                return stability_threshold(CurveClass(K.first, K.second),
                                           CurveClass(L.first, L.second), bound);
            });

    mod.def("weights", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        TrackWeights w = weights(make_params(a, m, p, q));
        return py::make_tuple(w.xs, w.ys);
    });
    mod.def("weights_closed_n3", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        auto [x3, y3] = weights_closed_n3(make_params(a, m, p, q));
        return py::make_tuple(x3, y3);
    });
    mod.def("lambda_alt", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        return lambda_alt(make_params(a, m, p, q));
    });
    mod.def("genus_formula", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        return genus_formula(make_params(a, m, p, q));
    });
    mod.def("switch_condition", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        SwitchCondition c = switch_condition(make_params(a, m, p, q));
        return py::make_tuple(c.holds, c.equality, c.m_and_a1_zero);
    });
    mod.def("strand_count_model", [](const std::vector<Int>& a, Int m, Int p, Int q) {
        return strand_count_model(make_params(a, m, p, q));
    });

    py::class_<RationalSurgeryDiagram>(mod, "RationalSurgeryDiagram")
        .def(py::init<std::vector<Slope>, IntMatrix>(), py::arg("coefficients"),
             py::arg("linking"))
        .def_readonly("coefficients", &RationalSurgeryDiagram::coefficients)
        .def_readonly("linking", &RationalSurgeryDiagram::linking)
        .def("__str__", [](const RationalSurgeryDiagram& d) {
            std::ostringstream os;
            write_diagram(os, d);
            return os.str();
        });

    py::class_<AbelianGroup>(mod, "AbelianGroup")
        .def_readonly("free_rank", &AbelianGroup::free_rank)
        .def_readonly("torsion", &AbelianGroup::torsion)
        .def("is_finite", &AbelianGroup::is_finite)
        .def("order", &AbelianGroup::order)
        .def("__str__", &AbelianGroup::str)
        .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup(" + g.str() + ")"; })
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; });

    mod.def("family_surgery_diagram",
            [](Int a1, Int a2, Int a3, Int m, Int b1, Int b2, const Slope& r,
               const std::string& variant) {
                return family_surgery_diagram(a1, a2, a3, m, b1, b2, r, variant_from_string(variant));
            },
            py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("m"), py::arg("b1"),
            py::arg("b2") = 0, py::arg("r") = Slope(0, 1), py::arg("variant") = "S3");
    mod.def("h1_presentation", &h1_presentation);
    mod.def("smith_normal_form", [](const IntMatrix& m) {
        SmithDecomposition s = smith_normal_form(m);
        return py::make_tuple(s.invariant_factors, s.free_rank);
    });
    mod.def("h1_group", &h1_group);
    mod.def("h1_order", [](const RationalSurgeryDiagram& d) -> py::object {
        std::optional<Int> o = h1_order(d);
        if (!o)
            return py::none();
        return py::cast(*o);
    });
    mod.def("closed_form_order", &closed_form_order);
    mod.def("determinant", &determinant);

    py::class_<BraidWord>(mod, "BraidWord")
        .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
        .def_readonly("strands", &BraidWord::strands)
        .def_readonly("letters", &BraidWord::letters)
        .def("__str__", &BraidWord::str)
        .def("__repr__",
             [](const BraidWord& w) {
                 return "BraidWord(" + std::to_string(w.strands) + ", [" + w.str() + "])";
             })
        .def("__eq__", [](const BraidWord& a, const BraidWord& b) { return a == b; })
        .def("__len__", &BraidWord::length);

    mod.def("alpha_form", &alpha_form);
    mod.def("omega_form", &omega_form);
    mod.def("free_reduce", &free_reduce);
    mod.def("inverse", &inverse);
    mod.def("mirror", &mirror);
    mod.def("reverse_word", &reverse_word);
    mod.def("generator_swap", &generator_swap);
    mod.def("concat", &concat);
    mod.def("decompose_two_bridge", [](const BraidWord& xi, const std::vector<int>& a_prime) {
        PlatDecomposition d = decompose_two_bridge(xi, a_prime);
        return py::make_tuple(d.alpha, d.omega, d.certificate_ok, d.detail);
    }, py::arg("xi"), py::arg("a_prime") = std::vector<int>{1, 1, 1});
    mod.def("genus_positive_closure", &genus_positive_closure);
    mod.def("permutation", &permutation);
    mod.def("closure_is_knot", &closure_is_knot);

    mod.def("family_row", [](Int a3, Int a2, Int a1, Int m, Int b1, Int b2,
                             const std::string& variant) {
        ReportRow r = row({a3, a2, a1, m, b1, b2, variant_from_string(variant)});
        py::dict out;
        out["a3"] = r.params.a3;
        out["a2"] = r.params.a2;
        out["a1"] = r.params.a1;
        out["m"] = r.params.m;
        out["b1"] = r.params.b1;
        out["b2"] = r.params.b2;
        out["variant"] = variant;
        if (!r.error.empty()) {
            out["error"] = r.error;
            return out;
        }
        if (r.lambda_alt)
            out["lambda_alt"] = *r.lambda_alt;
        if (r.genus_formula)
            out["genus_formula"] = *r.genus_formula;
        if (r.strand_model)
            out["strand_model"] = *r.strand_model;
        out["h1_order"] = r.h1_finite ? py::cast(*r.h1_order) : py::none();
        out["h1_group"] = r.h1_group;
        if (r.dual_route_ok)
            out["dual_route_ok"] = *r.dual_route_ok;
        if (r.winding_ok)
            out["winding_ok"] = *r.winding_ok;
        if (r.winding_root)
            out["winding_root"] = *r.winding_root;
        return out;
    }, py::arg("a3"), py::arg("a2"), py::arg("a1"), py::arg("m"), py::arg("b1"),
       py::arg("b2") = 0, py::arg("variant") = "S3");
    mod.def("run_check", [](bool verbose) {
        CheckReport r = run_check(verbose);
        return py::make_tuple(r.all_pass, r.text);
    }, py::arg("verbose") = false);
}
