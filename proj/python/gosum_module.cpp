#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gosum/catalog.hpp>
#include <gosum/corrections.hpp>
#include <gosum/gosper.hpp>
#include <gosum/tables.hpp>
#include <gosum/term.hpp>

namespace py = pybind11;
using namespace gosum;

namespace
{

py::object fraction(const Rational &r)
{
    static const py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(r));
}

py::list fractions(const std::vector<Rational> &v)
{
    py::list out;
    for (const auto &r : v) {
        out.append(fraction(r));
    }
    return out;
}

// Accepts int, Fraction or a "p/q" string. Floats are rejected.
Rational rational_arg(const py::handle &obj)
{
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error("floats are not exact; pass an int, a Fraction or a 'p/q' string");
    }
    return parse_rational(py::str(obj).cast<std::string>());
}

py::list polynomial(const Polynomial &p)
{
    return fractions(p.coefficients());
}

py::dict normal_form_dict(const NormalForm &nf)
{
    py::dict d;
    d["z"] = fraction(nf.z);
    d["a"] = polynomial(nf.a);
    d["b"] = polynomial(nf.b);
    d["c"] = polynomial(nf.c);
    return d;
}

py::object antidifference_py(const std::string &src)
{
    const TermSpec t = parse_term(src);
    const auto cert = antidifference(t);
    if (!cert) {
        return py::none();
    }
    py::dict d;
    d["term"] = pretty_print(t);
    d["x"] = polynomial(cert->x);
    d["multiplier"] = py::make_tuple(polynomial(cert->multiplier.numerator()),
                                     polynomial(cert->multiplier.denominator()));
    d["multiplier_text"] = to_string(cert->multiplier);
    d["normal_form"] = normal_form_dict(cert->normal_form);
    return d;
}

py::list corrections_py(const std::string &family, unsigned dmax, const py::object &a, const py::object &z,
                        const std::string &route)
{
    const BasisFamily fam{parse_family(family), rational_arg(a), rational_arg(z)};
    fam.validate();
    if (route == "recurrence") {
        return fractions(recurrence_route(fam, dmax).values);
    }
    if (route == "egf") {
        return fractions(egf_route(fam, dmax).values);
    }
    if (route == "basis") {
        return fractions(basis_reduction(fam, dmax).values);
    }
    throw py::value_error("route must be recurrence, egf or basis");
}

py::list int_row(const std::vector<Rational> &row)
{
    py::list out;
    for (const auto &x : row) {
        out.append(py::int_(py::str(to_string(x))));
    }
    return out;
}

py::list table_py(const std::string &which, unsigned dmax)
{
    if (dmax < 1) {
        throw py::value_error("dmax must be at least 1");
    }
    if (which == "gould") {
        return int_row(gould_numbers(dmax));
    }
    LowerTriangularTable t = which == "A"         ? build_A(dmax)
                             : which == "B"       ? build_B(dmax)
                             : which == "a121207" ? a121207_table(dmax)
                                                  : throw py::value_error("which must be A, B, gould or a121207");
    py::list rows;
    for (const auto &row : t.rows()) {
        rows.append(int_row(row));
    }
    return rows;
}

py::list verify_py()
{
    std::vector<IdentityResult> results;
    {
        py::gil_scoped_release release;
        results = run_catalog();
    }
    py::list out;
    for (const auto &r : results) {
        py::dict d;
        d["id"] = r.id;
        d["description"] = r.description;
        d["status"] = r.pass ? "PASS" : "FAIL";
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_gosum, m)
{
    m.doc() = "Exact Gosper summation and Bell-number correction constants";

    static py::exception<TermError> term_error(m, "TermError", PyExc_ValueError);
    py::register_exception<NotSummable>(m, "NotSummable", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const TermError &e) {
            py::set_error(term_error, (std::to_string(e.offset()) + ": " + e.what()).c_str());
        }
    });

    m.def(
        "parse_term", [](const std::string &src) { return pretty_print(parse_term(src)); }, py::arg("term"),
        "Parse a term and return its canonical spelling.");
    m.def(
        "term_value", [](const std::string &src, unsigned k) { return fraction(term_eval(parse_term(src), k)); },
        py::arg("term"), py::arg("k"), "Exact value f(k).");
    m.def("antidifference", &antidifference_py, py::arg("term"),
          "Certificate dict for a Gosper-summable term, None otherwise.");
    m.def(
        "definite_sum", [](const std::string &src, unsigned n) { return fraction(definite_sum(parse_term(src), n)); },
        py::arg("term"), py::arg("n"), "sum_{k=0}^{n} f(k) through the antidifference. Raises NotSummable.");
    m.def(
        "brute_sum", [](const std::string &src, unsigned n) { return fraction(brute_sum(parse_term(src), n)); },
        py::arg("term"), py::arg("n"), "sum_{k=0}^{n} f(k) term by term.");
    m.def("corrections", &corrections_py, py::arg("family"), py::arg("dmax"), py::arg("a") = 1, py::arg("z") = 1,
          py::arg("route") = "recurrence", "Correction constants c(0..dmax) as Fractions.");
    m.def("table", &table_py, py::arg("which"), py::arg("dmax"), "A, B, gould or a121207 as integer rows.");
    m.def("verify", &verify_py, "Run the identity catalog; one dict per identity.");
}
