// Python bindings for the isr1 core. Arbitrary-precision entries cross the
// boundary as native Python ints (decimal-string bridge, no truncation).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "isr1/bezout.hpp"
#include "isr1/errors.hpp"
#include "isr1/io.hpp"
#include "isr1/sampling.hpp"
#include "isr1/zdecider.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<isr1::Int> {
  public:
    PYBIND11_TYPE_CASTER(isr1::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        object repr = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!repr) {
            PyErr_Clear();
            return false;
        }
        try {
            value = isr1::Int(repr.cast<std::string>());
        } catch (const std::exception&) {
            return false;
        }
        return true;
    }

    static handle cast(const isr1::Int& src, return_value_policy, handle) {
        const std::string digits = src.str();
        return handle(PyLong_FromString(digits.c_str(), nullptr, 10));
    }
};

}  // namespace pybind11::detail

namespace {

using namespace isr1;

Mat2 mat_from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
        throw py::value_error("matrix needs two rows of two integers");
    }
    return {rows[0][0], rows[0][1], rows[1][0], rows[1][1]};
}

std::string mat_repr(const Mat2& m) {
    std::ostringstream os;
    os << "Mat2(" << m << ")";
    return os.str();
}

ModMat modmat_from_rows(int n, const std::vector<std::vector<long long>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
        throw py::value_error("matrix needs two rows of two integers");
    }
    auto r = [&](long long v) { return static_cast<int>(((v % n) + n) % n); };
    return ModMat(n, r(rows[0][0]), r(rows[0][1]), r(rows[1][0]), r(rows[1][1]));
}

py::object modmat_rows(const std::optional<ModMat>& m) {
    if (!m) return py::none();
    py::list r1, r2;
    r1.append(m->e[0]);
    r1.append(m->e[1]);
    r2.append(m->e[2]);
    r2.append(m->e[3]);
    py::list rows;
    rows.append(r1);
    rows.append(r2);
    return rows;
}

bool witness_verify(const Witness& w, int samples, py::object seed, long long bound) {
    const std::uint64_t s = seed.is_none() ? kDefaultSeed : seed.cast<std::uint64_t>();
    SampleRng rng(s);
    std::vector<Mat2> xs;
    xs.reserve(samples);
    for (int i = 0; i < samples; ++i) xs.push_back(rng.next_mat(bound));
    return static_cast<bool>(verify_witness(w.matrix, w, xs));
}

}  // namespace

PYBIND11_MODULE(_isr1, m) {
    m.doc() = "Exact isr1 decisions for 2x2 integer matrices, with verified "
              "unitizers, clean decompositions, and finite-ring oracles.";

    py::register_exception<NotCoprimeError>(m, "NotCoprimeError", PyExc_ValueError);
    py::register_exception<NotUnimodularError>(m, "NotUnimodularError", PyExc_ValueError);
    py::register_exception<NotPrimitiveError>(m, "NotPrimitiveError", PyExc_ValueError);
    py::register_exception<NotRankOneError>(m, "NotRankOneError", PyExc_ValueError);
    py::register_exception<NotNilpotentError>(m, "NotNilpotentError", PyExc_ValueError);
    py::register_exception<CriterionFailsError>(m, "CriterionFailsError", PyExc_ValueError);
    py::register_exception<DivisibilityFailsError>(m, "DivisibilityFailsError",
                                                   PyExc_ValueError);
    py::register_exception<VerificationFailedError>(m, "VerificationFailedError",
                                                    PyExc_RuntimeError);
    py::register_exception<ModulusTooLargeError>(m, "ModulusTooLargeError", PyExc_ValueError);
    py::register_exception<NotApplicableError>(m, "NotApplicableError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Mat2>(m, "Mat2")
        .def(py::init<Int, Int, Int, Int>(), py::arg("a11"), py::arg("a12"), py::arg("a21"),
             py::arg("a22"))
        .def(py::init(&mat_from_rows), py::arg("rows"))
        .def_static("parse", &parse_mat2, py::arg("text"),
                    "Parse the \"a11,a12;a21,a22\" text format.")
        .def_static("zero", &Mat2::zero)
        .def_static("identity", &Mat2::identity)
        .def_readonly("a11", &Mat2::a11)
        .def_readonly("a12", &Mat2::a12)
        .def_readonly("a21", &Mat2::a21)
        .def_readonly("a22", &Mat2::a22)
        .def("rows",
             [](const Mat2& a) {
                 return std::vector<std::vector<Int>>{{a.a11, a.a12}, {a.a21, a.a22}};
             })
        .def("det", [](const Mat2& a) { return det(a); })
        .def("trace", [](const Mat2& a) { return trace(a); })
        .def("adjugate", [](const Mat2& a) { return adjugate(a); })
        .def("content", [](const Mat2& a) { return content(a); })
        .def("is_idempotent", [](const Mat2& a) { return is_idempotent(a); })
        .def("is_nilpotent", [](const Mat2& a) { return is_nilpotent(a); })
        .def("is_unimodular", [](const Mat2& a) { return is_unimodular(a); })
        .def("conjugate", [](const Mat2& a, const Mat2& t) { return conjugate(a, t); },
             py::arg("t"), "T^-1 * self * T for unimodular T.")
        .def("format", &format_mat2, "The \"a11,a12;a21,a22\" text form.")
        .def("__repr__", &mat_repr)
        .def("__eq__", [](const Mat2& a, const Mat2& b) { return a == b; })
        .def("__add__", [](const Mat2& a, const Mat2& b) { return a + b; })
        .def("__sub__", [](const Mat2& a, const Mat2& b) { return a - b; })
        .def("__mul__", [](const Mat2& a, const Mat2& b) { return a * b; })
        .def("__neg__", [](const Mat2& a) { return -a; });

    py::class_<BezoutFamily>(m, "BezoutFamily")
        .def_readonly("a", &BezoutFamily::a)
        .def_readonly("b", &BezoutFamily::b)
        .def_readonly("g", &BezoutFamily::g)
        .def_readonly("x0", &BezoutFamily::x0)
        .def_readonly("z0", &BezoutFamily::z0)
        .def("solution", &BezoutFamily::solution, py::arg("k"),
             "The k-th member (x0 + k*b/g, z0 - k*a/g) of the solution family.")
        .def("contains", &BezoutFamily::contains, py::arg("x"), py::arg("z"))
        .def("__repr__", [](const BezoutFamily& f) {
            std::ostringstream os;
            os << "BezoutFamily(a=" << f.a << ", b=" << f.b << ", g=" << f.g << ", x0=" << f.x0
               << ", z0=" << f.z0 << ")";
            return os.str();
        });

    m.def("ext_gcd", &ext_gcd, py::arg("a"), py::arg("b"),
          "Extended Euclid: a*x0 + b*z0 = g = gcd(|a|,|b|).");
    m.def(
        "minimal_pairs",
        [](const Int& a, const Int& b) {
            std::vector<std::pair<Int, Int>> out;
            for (const MinimalPair& p : minimal_pairs(a, b)) out.emplace_back(p.x, p.z);
            return out;
        },
        py::arg("a"), py::arg("b"),
        "The two minimal Bezout pairs (x, z) of coprime positive a, b.");

    py::class_<ShiftedProductSolutions>(m, "ShiftedProductSolutions")
        .def_readonly("solutions", &ShiftedProductSolutions::solutions)
        .def_readonly("fixed_k", &ShiftedProductSolutions::fixed_k)
        .def_readonly("fixed_l", &ShiftedProductSolutions::fixed_l)
        .def("infinite", &ShiftedProductSolutions::infinite)
        .def("any", &ShiftedProductSolutions::any)
        .def("__repr__", [](const ShiftedProductSolutions& s) {
            std::ostringstream os;
            os << "ShiftedProductSolutions(" << s.solutions.size() << " finite"
               << (s.infinite() ? ", infinite lines" : "") << ")";
            return os.str();
        });

    m.def("solve_shifted_product", &solve_shifted_product, py::arg("a"), py::arg("z0"),
          py::arg("b"), py::arg("target"),
          "All integer (k, l) with (a*k - z0)*(a*l + b) = target.");
    m.def("divisibility_isr1", &divisibility_isr1, py::arg("a"), py::arg("b"),
          "Does some solution of a*x + b*z = 1 satisfy z | x-1 or z | x+1?");

    py::class_<Witness>(m, "Witness")
        .def_readonly("matrix", &Witness::matrix)
        .def_readonly("E", &Witness::E)
        .def_readonly("Y", &Witness::Y)
        .def_readonly("sign", &Witness::sign)
        .def("verify", &witness_verify, py::arg("samples") = 50, py::arg("seed") = py::none(),
             py::arg("bound") = 100,
             "Re-check all invariants and det(A + Y(XA - I)) = -sign on sampled X.")
        .def("__repr__", [](const Witness& w) {
            std::ostringstream os;
            os << "Witness(E=" << w.E << ", sign=" << (w.sign > 0 ? "+1" : "-1") << ")";
            return os.str();
        });

    py::class_<Decision>(m, "Decision")
        .def_property_readonly("status",
                               [](const Decision& d) { return to_string(d.status); })
        .def_property_readonly("det", [](const Decision& d) { return d.det_value; })
        .def_property_readonly("content", [](const Decision& d) { return d.content_value; })
        .def_readonly("input", &Decision::input)
        .def_readonly("witness", &Decision::witness)
        .def_readonly("trivial_unitizer", &Decision::trivial_unitizer)
        .def_property_readonly("reason",
                               [](const Decision& d) -> py::object {
                                   if (!d.reason) return py::none();
                                   return py::str(to_string(*d.reason));
                               })
        .def_readonly("terminal_pair", &Decision::terminal_pair)
        .def("to_json", [](const Decision& d) { return decision_to_json(d, -1); })
        .def("__repr__", [](const Decision& d) {
            return "Decision(status='" + to_string(d.status) + "')";
        });

    m.def("decide_isr1", &decide_isr1, py::arg("matrix"),
          "Classify a matrix as unit / isr1 / not_sr1 / not_isr1 with a "
          "re-verified certificate.");
    m.def("clean_decompose", &clean_decompose, py::arg("matrix"),
          "A = E + U with E idempotent and U a unit (isr1 matrices only).");
    m.def(
        "euclidean_criterion",
        [](const Int& a, const Int& b) {
            const EuclideanResult r = euclidean_criterion(a, b);
            std::vector<std::string> steps;
            for (const ReductionStep& s : r.trace) {
                if (std::holds_alternative<ShiftStep>(s)) {
                    std::ostringstream os;
                    os << "shift(" << std::get<ShiftStep>(s).q << ")";
                    steps.push_back(os.str());
                } else if (std::holds_alternative<FlipSecondEntryStep>(s)) {
                    steps.emplace_back("flip");
                }
            }
            return py::make_tuple(r.accepted, std::make_pair(r.terminal_a, r.terminal_b),
                                  steps);
        },
        py::arg("a"), py::arg("b"),
        "(accepted, (terminal_a, terminal_b), reduction steps) for coprime a, b.");

    m.def("parse_mat2", &parse_mat2, py::arg("text"));
    m.def("format_mat2", &format_mat2, py::arg("matrix"));

    m.def(
        "enumerate_idempotents",
        [](int n) {
            std::vector<std::vector<std::vector<int>>> out;
            for (const ModMat& e : enumerate_idempotents(n)) {
                out.push_back({{e.e[0], e.e[1]}, {e.e[2], e.e[3]}});
            }
            return out;
        },
        py::arg("n"), "All idempotent 2x2 matrices over Z/n (2 <= n <= 12).");
    m.def(
        "is_left_isr1_mod",
        [](int n, const std::vector<std::vector<long long>>& rows, const std::string& conv) {
            const SweepResult r = is_left_isr1_def(
                modmat_from_rows(n, rows), conv == "c2" ? Convention::C2 : Convention::C1);
            return py::make_tuple(r.ok, modmat_rows(r.failing_x));
        },
        py::arg("n"), py::arg("rows"), py::arg("convention") = "c1",
        "Definitional left-isr1 sweep over Z/n; returns (ok, failing_x or None).");
    m.def(
        "oracle_full_json",
        [](int n) { return report_to_json(oracle_full(n), -1); }, py::arg("n"),
        "Full classification report over Z/n (n <= 4) as a JSON string.");
    m.def(
        "oracle_targeted_json",
        [](int n, const std::vector<std::vector<std::vector<long long>>>& mats,
           const std::string& conv) {
            std::vector<ModMat> targets;
            for (const auto& rows : mats) targets.push_back(modmat_from_rows(n, rows));
            return report_to_json(
                oracle_targeted(n, targets, conv == "c2" ? Convention::C2 : Convention::C1),
                -1);
        },
        py::arg("n"), py::arg("matrices"), py::arg("convention") = "c1",
        "Targeted oracle report over Z/n (n <= 12) as a JSON string.");

    m.attr("DEFAULT_SEED") = kDefaultSeed;
    m.attr("__version__") = "0.1.0";
}
