#include "cubcoh/cohomology.hpp"
#include "cubcoh/io.hpp"
#include "cubcoh/propcheck.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cubcoh;

namespace
{

py::int_ to_py(Integer const& v)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Integer from_py(py::handle h)
{
    return Integer(py::str(h).cast<std::string>());
}

py::list vector_to_py(IntVector const& v)
{
    py::list out;
    for (auto const& e : v)
        out.append(to_py(e));
    return out;
}

py::list matrix_to_py(IntMatrix const& m)
{
    py::list out;
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.append(vector_to_py(m.row(r)));
    return out;
}

IntMatrix matrix_from_py(py::sequence rows)
{
    std::size_t const n = rows.size();
    std::size_t const cols = n ? py::len(rows[0]) : 0;
    IntMatrix m(n, cols);
    for (std::size_t r = 0; r < n; ++r)
    {
        py::sequence row = rows[r];
        if (row.size() != cols)
            throw Error("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = from_py(row[c]);
    }
    return m;
}

// Cochains cross the boundary as {label: value}, zeros omitted.
py::dict cochain_to_py(PrecubicalSet const& x, Cochain const& c)
{
    py::dict out;
    for (std::size_t k = 0; k < c.values.size(); ++k)
        if (!c.values[k].is_zero())
            out[py::str(x.label({static_cast<std::uint32_t>(c.dim), static_cast<std::uint32_t>(k)}))] = to_py(c.values[k]);
    return out;
}

Cochain cochain_from_py(PrecubicalSet const& x, std::size_t dim, py::dict values, CoeffRing const& ring)
{
    Cochain c = zero_cochain(x, dim, ring);
    for (auto const& [key, value] : values)
    {
        auto label = key.cast<std::string>();
        auto id = x.find(dim, label);
        if (!id)
            throw Error("no " + std::to_string(dim) + "-cube '" + label + "'");
        c.values[id->index] = ring.normalize(from_py(value));
    }
    return c;
}

py::object json_to_py(nlohmann::json const& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict report_to_py(PropertyReport const& r)
{
    py::dict d;
    d["name"] = r.name;
    d["coefficients"] = r.ring;
    d["trials"] = r.trials;
    d["vacuous"] = r.vacuous;
    d["report_only"] = r.report_only;
    d["passed"] = r.passed();
    d["elapsed_ms"] = r.elapsed_ms;
    py::list failures;
    for (auto const& f : r.failures)
    {
        py::dict e;
        e["trial"] = f.trial;
        e["seed"] = f.seed;
        e["digest"] = f.digest;
        e["message"] = f.message;
        e["instance"] = f.instance;
        failures.append(e);
    }
    d["failures"] = failures;
    return d;
}

} // namespace

PYBIND11_MODULE(_cubcoh, m)
{
    m.doc() = "Cohomology rings of finite precubical sets";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<PrecubicalSet>(m, "PrecubicalSet")
        .def_property_readonly("counts", &PrecubicalSet::cube_counts)
        .def_property_readonly("max_dim", &PrecubicalSet::max_dim)
        .def("labels",
             [](PrecubicalSet const& x, std::size_t dim) {
                 std::vector<std::string> out;
                 for (std::uint32_t k = 0; k < x.count(dim); ++k)
                     out.push_back(x.label({static_cast<std::uint32_t>(dim), k}));
                 return out;
             })
        .def(
            "face",
            [](PrecubicalSet const& x, std::size_t dim, std::string const& label, std::size_t i, int eps) {
                auto id = x.find(dim, label);
                if (!id)
                    throw Error("no " + std::to_string(dim) + "-cube '" + label + "'");
                return x.label(x.face(*id, i, eps));
            },
            py::arg("dim"), py::arg("label"), py::arg("i"), py::arg("eps"))
        .def("__eq__", [](PrecubicalSet const& a, PrecubicalSet const& b) { return a == b; })
        .def("__repr__", [](PrecubicalSet const& x) {
            std::string s = "PrecubicalSet(counts=[";
            for (std::size_t d = 0; d < x.num_dims(); ++d)
                s += (d ? ", " : "") + std::to_string(x.count(d));
            return s + "])";
        });

    m.def("builtin", &builtin, py::arg("name"));
    m.def("builtin_names", &builtin_names);
    m.def("standard_cube", &standard_cube, py::arg("n"));
    m.def("torus", &torus);
    m.def("tensor_product", &tensor_product);
    m.def("parse", [](std::string const& text) { return parse_document(text); }, py::arg("text"));
    m.def("serialize", &serialize_document);
    m.def("read", &read_document, py::arg("path"));
    m.def("validate", [](PrecubicalSet const& x) {
        std::vector<std::string> out;
        for (auto const& v : validate(x))
            out.push_back(v.describe(x));
        return out;
    });

    m.def(
        "cohomology",
        [](PrecubicalSet const& x, std::string const& coeff) {
            return json_to_py(groups_json(x, cohomology_groups(x, CoeffRing::parse(coeff))));
        },
        py::arg("x"), py::arg("coeff") = "Z");
    m.def(
        "ring_table",
        [](PrecubicalSet const& x, std::string const& coeff) {
            return json_to_py(ring_table_json(x, ring_table(x, CoeffRing::parse(coeff))));
        },
        py::arg("x"), py::arg("coeff") = "Z");
    m.def(
        "cup",
        [](PrecubicalSet const& x, std::size_t p, py::dict phi, std::size_t q, py::dict psi, std::string const& coeff) {
            auto const ring = CoeffRing::parse(coeff);
            return cochain_to_py(x, cup(x, cochain_from_py(x, p, phi, ring), cochain_from_py(x, q, psi, ring)));
        },
        py::arg("x"), py::arg("p"), py::arg("phi"), py::arg("q"), py::arg("psi"), py::arg("coeff") = "Z");
    m.def(
        "coboundary",
        [](PrecubicalSet const& x, std::size_t n, py::dict phi, std::string const& coeff) {
            return cochain_to_py(x, coboundary(x, cochain_from_py(x, n, phi, CoeffRing::parse(coeff))));
        },
        py::arg("x"), py::arg("n"), py::arg("phi"), py::arg("coeff") = "Z");

    m.def(
        "smith_normal_form",
        [](py::sequence rows) {
            auto const f = smith_normal_form(matrix_from_py(rows));
            py::dict d;
            d["U"] = matrix_to_py(f.U);
            d["V"] = matrix_to_py(f.V);
            d["S"] = matrix_to_py(f.S);
            d["diag"] = vector_to_py(f.diag);
            return d;
        },
        py::arg("matrix"));

    m.def("property_names", &property_names);
    m.def(
        "check",
        [](std::string const& property, std::size_t trials, std::uint64_t seed, std::string const& coeff,
           std::size_t max_dim, std::optional<PrecubicalSet> fixed) {
            GenConfig cfg;
            cfg.seed = seed;
            cfg.ring = CoeffRing::parse(coeff);
            cfg.max_dim = max_dim;
            PropertyReport r;
            {
                py::gil_scoped_release release;
                r = check(property, cfg, trials, fixed ? &*fixed : nullptr);
            }
            return report_to_py(r);
        },
        py::arg("property"), py::arg("trials") = 100, py::arg("seed") = 0, py::arg("coeff") = "Z",
        py::arg("max_dim") = 3, py::arg("instance") = py::none());
}
