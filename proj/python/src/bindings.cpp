#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gerst/axioms.hpp>
#include <gerst/document.hpp>
#include <gerst/errors.hpp>
#include <gerst/gerstenhaber.hpp>
#include <gerst/grading.hpp>
#include <gerst/maurer_cartan.hpp>
#include <gerst/sexpr.hpp>

namespace py = pybind11;
using namespace gerst;

namespace {

// Multi-indices cross the boundary as tuples of ints.
template <bool S>
py::tuple to_tuple(const BasicIndex<S>& a) {
    py::tuple t(a.dim());
    for (int i = 0; i < a.dim(); ++i) t[i] = a[i];
    return t;
}

IntIndex to_int_index(const std::vector<int>& v) { return IntIndex(v); }

Semigroup make_semigroup(const std::vector<std::vector<int>>& generators, int cap) {
    if (generators.empty()) throw PreconditionError("a semigroup needs at least one generator");
    std::vector<IntIndex> gens;
    for (const auto& g : generators) gens.emplace_back(g);
    const int dim = gens.front().dim();
    return Semigroup(dim, std::move(gens), cap);
}

// Coefficients are returned as "p/q" strings; the Python layer turns them into Fractions.
py::list cochain_terms(const Cochain& c) {
    py::list out;
    for (const auto& [t, coeff] : c.terms()) {
        py::list slots;
        for (const auto& s : t.slots) slots.append(to_tuple(s));
        out.append(py::make_tuple(to_string(coeff), to_tuple(t.x), py::tuple(slots)));
    }
    return out;
}

py::list polynomial_terms(const Polynomial& u) {
    py::list out;
    for (const auto& [e, coeff] : u.terms()) out.append(py::make_tuple(to_string(coeff), to_tuple(e)));
    return out;
}

py::dict membership_dict(const MembershipResult& r) {
    py::dict d;
    d["status"] = to_string(r.status);
    d["certificate"] = r.certificate;
    d["reason"] = r.reason;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Gerstenhaber algebra of polydifferential operators on polynomial algebras";

    auto error = py::register_exception<Error>(m, "GerstError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<InconclusiveError>(m, "InconclusiveError", error.ptr());
    py::register_exception<CoboundaryError>(m, "CoboundaryError", error.ptr());

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&parse_polynomial), py::arg("text"))
        .def_property_readonly("dimension", &Polynomial::dimension)
        .def("terms", &polynomial_terms)
        .def("is_zero", &Polynomial::is_zero)
        .def("__str__", &print_polynomial)
        .def("__repr__", [](const Polynomial& u) { return "Polynomial(" + to_string(polynomial_sexpr(u)) + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self);

    py::class_<Cochain>(m, "Cochain")
        .def(py::init(&parse_cochain), py::arg("text"))
        .def_static("zero", [](int dim) { return Cochain(dim); }, py::arg("dimension"))
        .def_property_readonly("dimension", &Cochain::dimension)
        .def_property_readonly("arity", &Cochain::arity)
        .def("terms", &cochain_terms)
        .def("is_zero", &Cochain::is_zero)
        .def("__len__", &Cochain::size)
        .def("__str__", &print_cochain)
        .def("__repr__", [](const Cochain& c) { return "Cochain(" + to_string(cochain_sexpr(c)) + ")"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("scale", [](const Cochain& c, const std::string& q) { return c * parse_rational(q); }, py::arg("factor"));

    py::class_<Deformation>(m, "Deformation")
        .def(py::init([](const std::string& text) { return parse_document(text).deformation(); }), py::arg("text"))
        .def_property_readonly("dimension", &Deformation::dimension)
        .def_property_readonly("order", &Deformation::order)
        .def("term", &Deformation::term, py::arg("k"))
        .def("obstruction", [](const Deformation& d, int k) { return obstruction(d, k).value; }, py::arg("k"))
        .def("__str__", [](const Deformation& d) { return print_document(Document::of(d)); })
        .def(py::self == py::self);

    m.def("multiplication", &multiplication_cochain, py::arg("dimension"));
    m.def("identity", &identity_cochain, py::arg("dimension"));
    m.def("euler_field", &euler_field, py::arg("dimension"), py::arg("i"));
    m.def("cup", &cup);
    m.def("insert", &insert, py::arg("f"), py::arg("slot"), py::arg("g"));
    m.def("bracket", &bracket);
    m.def("delta", &hochschild_delta);
    m.def("delta_via_bracket", &delta_via_bracket);
    m.def("solve_delta", [](const Cochain& b, int max_block_order) { return solve_delta(b, SolverOptions{max_block_order}); },
          py::arg("b"), py::arg("max_block_order") = 32);
    m.def("apply", [](const Cochain& c, const std::vector<Polynomial>& args) { return gerst::apply(c, args); },
          py::arg("cochain"), py::arg("args"));

    m.def("weight_decomposition", [](const Cochain& c) {
        py::dict out;
        for (const auto& [w, part] : decompose_by_weight(c)) out[to_tuple(w)] = part;
        return out;
    });
    m.def("bigrade_decomposition", [](const Cochain& c) {
        py::dict out;
        for (const auto& [g, part] : decompose_by_bigrade(c)) out[py::make_tuple(to_tuple(g.a), to_tuple(g.b))] = part;
        return out;
    });
    m.def("semigroup_member",
          [](const std::vector<std::vector<int>>& gens, const std::vector<int>& a, int min_summands, int cap) {
              return membership_dict(semigroup_member(make_semigroup(gens, cap), to_int_index(a), min_summands));
          },
          py::arg("generators"), py::arg("weight"), py::arg("min_summands") = 1, py::arg("cap") = 64);
    m.def("in_c_delta",
          [](const Cochain& c, const std::vector<std::vector<int>>& gens, int cap) {
              return to_string(in_c_delta(c, make_semigroup(gens, cap)).status);
          },
          py::arg("cochain"), py::arg("generators"), py::arg("cap") = 64);
    m.def("in_ideal",
          [](const Cochain& c, const std::vector<std::vector<int>>& gens, int r, int cap) {
              return to_string(in_ideal(c, make_semigroup(gens, cap), r).status);
          },
          py::arg("cochain"), py::arg("generators"), py::arg("r") = 2, py::arg("cap") = 64);
    m.def("project_c_delta",
          [](const Cochain& c, const std::vector<std::vector<int>>& gens, int cap) {
              return project_c_delta(c, make_semigroup(gens, cap));
          },
          py::arg("cochain"), py::arg("generators"), py::arg("cap") = 64);
    m.def("theta", [](const Cochain& c, const std::vector<int>& I) { return theta_apply(c, IndexSet(c.dimension(), I)); },
          py::arg("cochain"), py::arg("indices"));
    m.def("theta_split",
          [](const Cochain& c, const std::vector<int>& I) {
              auto s = theta_split(c, IndexSet(c.dimension(), I));
              return py::make_tuple(s.plus, s.minus);
          },
          py::arg("cochain"), py::arg("indices"));

    m.def("mc_solve",
          [](const Cochain& pi1, int order, std::optional<std::vector<std::vector<int>>> gens, int max_block_order) {
              std::optional<Semigroup> delta;
              if (gens) delta = make_semigroup(*gens, 64);
              return solve_maurer_cartan(pi1, order, delta, SolverOptions{max_block_order});
          },
          py::arg("pi1"), py::arg("order"), py::arg("delta") = py::none(), py::arg("max_block_order") = 32);
    m.def("star_apply",
          [](const Deformation& d, const Polynomial& f, const Polynomial& g) { return star_apply(d, f, g); });
    m.def("associativity_defect", &associativity_defect);

    m.def("verify_axioms",
          [](std::uint64_t seed, int trials) {
              py::list out;
              for (const auto& r : run_all_laws(seed, trials)) out.append(py::make_tuple(r.name, r.passed, r.detail));
              return out;
          },
          py::arg("seed") = 1, py::arg("trials") = 20);
}
