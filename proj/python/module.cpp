// hyperpoly._core: python bindings for the exact hyperbolic-polynomial
// library. Rationals cross the boundary as "num/den" strings (or python
// ints), so no precision is lost in either direction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/io.hpp"
#include "hyperpoly/matroid.hpp"
#include "hyperpoly/pencil.hpp"
#include "hyperpoly/polynomial.hpp"

namespace py = pybind11;
using namespace hyperpoly;

namespace {

Rational rational_from_py(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj)) {
    return Rational::parse(py::str(obj).cast<std::string>());
  }
  throw py::type_error("expected an int or a 'num/den' string, got " +
                       py::str(py::type::of(obj)).cast<std::string>());
}

Point point_from_py(const py::sequence& seq) {
  std::vector<Rational> coords;
  coords.reserve(py::len(seq));
  for (const auto& item : seq) coords.push_back(rational_from_py(item));
  return Point(std::move(coords));
}

std::vector<LinearForm> forms_from_py(const py::sequence& seq) {
  std::vector<LinearForm> forms;
  for (const auto& row : seq) {
    std::vector<Rational> coeffs;
    for (const auto& item : row.cast<py::sequence>()) coeffs.push_back(rational_from_py(item));
    forms.push_back(LinearForm(std::move(coeffs)));
  }
  return forms;
}

py::list point_to_py(const Point& x) {
  py::list out;
  for (const auto& c : x.coords) out.append(c.str());
  return out;
}

py::list terms_to_py(const Polynomial& p) {
  py::list out;
  for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(py::tuple(py::cast(e)), c.str()));
  return out;
}

UnivariatePolynomial univariate_from_py(const py::sequence& coeffs) {
  std::vector<Rational> c;
  for (const auto& item : coeffs) c.push_back(rational_from_py(item));
  return UnivariatePolynomial(std::move(c));
}

Bound bound_from_py(const py::handle& obj, bool lower) {
  if (obj.is_none()) return lower ? Bound::neg_inf() : Bound::pos_inf();
  return Bound::at(rational_from_py(obj));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact hyperbolic polynomials, derivative cones, spectrahedral pencils";

  py::register_exception<not_hyperbolic_error>(m, "NotHyperbolicError", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](int nvars, const py::sequence& terms) {
             Polynomial p(nvars);
             for (const auto& t : terms) {
               auto pair = t.cast<py::sequence>();
               auto exps = pair[0].cast<std::vector<int>>();
               p += Polynomial::monomial(nvars, std::move(exps), rational_from_py(pair[1]));
             }
             return p;
           }),
           py::arg("nvars"), py::arg("terms") = py::list())
      .def_property_readonly("nvars", &Polynomial::nvars)
      .def("terms", &terms_to_py)
      .def("total_degree", &Polynomial::total_degree)
      .def("homogeneous_degree",
           [](const Polynomial& p) { return p.homogeneous_degree(); })
      .def("is_zero", &Polynomial::is_zero)
      .def("eval",
           [](const Polynomial& p, const py::sequence& x) { return p.eval(point_from_py(x)).str(); })
      .def("polar",
           [](const Polynomial& p, const py::sequence& e, int i) { return p.polar(point_from_py(e), i); },
           py::arg("e"), py::arg("i"))
      .def("restrict",
           [](const Polynomial& p, const py::sequence& q, const py::sequence& e) {
             return p.restrict_to_line(point_from_py(q), point_from_py(e));
           },
           py::arg("q"), py::arg("e"))
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("scale", [](const Polynomial& p, const py::handle& c) { return rational_from_py(c) * p; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("to_json", [](const Polynomial& p) { return polynomial_to_json(p).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return polynomial_from_json(nlohmann::json::parse(text), "from_json");
                  })
      .def("__repr__", [](const Polynomial& p) { return p.str(); });

  m.def("variable", &Polynomial::variable, py::arg("nvars"), py::arg("i"));
  m.def("constant",
        [](int nvars, const py::handle& c) { return Polynomial::constant(nvars, rational_from_py(c)); });
  m.def("elementary_symmetric", &elementary_symmetric, py::arg("n"), py::arg("k"));
  m.def("product_of_forms",
        [](const py::sequence& forms) { return product_of_forms(forms_from_py(forms)); });

  py::class_<UnivariatePolynomial>(m, "UnivariatePolynomial")
      .def(py::init(&univariate_from_py), py::arg("coeffs"))
      .def("coeffs",
           [](const UnivariatePolynomial& u) {
             py::list out;
             for (const auto& c : u.coeffs()) out.append(c.str());
             return out;
           })
      .def("degree", &UnivariatePolynomial::degree)
      .def("eval", [](const UnivariatePolynomial& u, const py::handle& x) {
        return u.eval(rational_from_py(x)).str();
      })
      .def("__eq__",
           [](const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a == b; })
      .def("__repr__", [](const UnivariatePolynomial& u) { return u.str(); });

  m.def("is_real_rooted",
        [](const py::object& u) { return is_real_rooted(py::isinstance<UnivariatePolynomial>(u)
                                                            ? u.cast<UnivariatePolynomial>()
                                                            : univariate_from_py(u)); });
  m.def("mult_at_zero", [](const py::object& u) {
    return mult_at_zero(py::isinstance<UnivariatePolynomial>(u) ? u.cast<UnivariatePolynomial>()
                                                                : univariate_from_py(u));
  });
  m.def("all_roots_nonneg", [](const py::object& u) {
    return all_roots_nonneg(py::isinstance<UnivariatePolynomial>(u)
                                ? u.cast<UnivariatePolynomial>()
                                : univariate_from_py(u));
  });
  m.def(
      "sturm_count",
      [](const py::object& u, const py::handle& a, const py::handle& b) {
        const auto poly = py::isinstance<UnivariatePolynomial>(u) ? u.cast<UnivariatePolynomial>()
                                                                  : univariate_from_py(u);
        return sturm_count(poly, bound_from_py(a, true), bound_from_py(b, false));
      },
      py::arg("u"), py::arg("a") = py::none(), py::arg("b") = py::none(),
      "distinct real roots in the half-open interval (a, b]; None means infinite");

  py::class_<HyperbolicContext>(m, "HyperbolicContext")
      .def(py::init([](const Polynomial& p, const py::sequence& e) {
             return HyperbolicContext(p, point_from_py(e));
           }),
           py::arg("p"), py::arg("e"))
      .def_property_readonly("degree", &HyperbolicContext::degree)
      .def_property_readonly("p", &HyperbolicContext::p)
      .def("eigenvalue_poly",
           [](const HyperbolicContext& ctx, const py::sequence& x) {
             return eigenvalue_poly(ctx, point_from_py(x));
           })
      .def("in_cone",
           [](const HyperbolicContext& ctx, const py::sequence& x, bool open) {
             return in_cone(ctx, point_from_py(x), open ? ConeMode::Open : ConeMode::Closed);
           },
           py::arg("x"), py::arg("open") = false)
      .def("in_derivative_cone",
           [](const HyperbolicContext& ctx, const py::sequence& x, int i) {
             return in_derivative_cone(ctx, point_from_py(x), i);
           },
           py::arg("x"), py::arg("i"));

  m.def(
      "check_hyperbolic",
      [](const Polynomial& p, const py::sequence& e, int samples, std::uint64_t seed, int jobs) {
        const auto v = check_hyperbolic(p, point_from_py(e), samples, seed, jobs);
        py::dict out;
        out["hyperbolic"] = v.hyperbolic;
        out["samples"] = v.samples;
        out["seed"] = v.seed;
        out["witness"] = v.witness ? py::object(point_to_py(*v.witness)) : py::none();
        out["witness_index"] = v.witness_index;
        return out;
      },
      py::arg("p"), py::arg("e"), py::arg("samples") = 64, py::arg("seed") = 0,
      py::arg("jobs") = 1);

  py::class_<SymmetricMatrix>(m, "SymmetricMatrix")
      .def(py::init([](int size, const py::sequence& entries) {
             std::vector<Rational> e;
             for (const auto& item : entries) e.push_back(rational_from_py(item));
             return SymmetricMatrix(size, std::move(e));
           }),
           py::arg("size"), py::arg("entries"))
      .def_property_readonly("size", &SymmetricMatrix::size)
      .def("entries", [](const SymmetricMatrix& s) {
        py::list out;
        for (const auto& v : s.row_major()) out.append(v.str());
        return out;
      });

  m.def("is_psd", &is_psd);
  m.def("is_pd", &is_pd);
  m.def("char_poly", &char_poly);

  py::class_<SymmetricPencil>(m, "SymmetricPencil")
      .def_property_readonly("nvars", &SymmetricPencil::nvars)
      .def_property_readonly("size", &SymmetricPencil::size)
      .def("mats",
           [](const SymmetricPencil& p) {
             py::list out;
             for (int k = 0; k < p.nvars(); ++k) {
               py::list rows;
               for (const auto& v : p.mat(k).row_major()) rows.append(v.str());
               out.append(rows);
             }
             return out;
           })
      .def("eval",
           [](const SymmetricPencil& p, const py::sequence& x) {
             return pencil_eval(p, point_from_py(x));
           })
      .def("det",
           [](const SymmetricPencil& p, int max_size) { return pencil_det(p, max_size); },
           py::arg("max_size") = 12)
      .def("to_json", [](const SymmetricPencil& p) { return pencil_to_json(p).dump(); })
      .def("__eq__", [](const SymmetricPencil& a, const SymmetricPencil& b) { return a == b; });

  m.def("renegar_pencil", [](const py::sequence& forms, const py::sequence& e) {
    return renegar_pencil(forms_from_py(forms), point_from_py(e));
  });
  m.def("verify_theorem1", [](const py::sequence& forms, const py::sequence& e) {
    const auto r = verify_theorem1(forms_from_py(forms), point_from_py(e));
    return py::make_tuple(r.equal, r.determinant, r.polar);
  });
  m.def("e2_arrowhead", &e2_arrowhead, py::arg("n"), py::arg("literal_paper_matrix") = false);

  py::class_<RealizationMatrix>(m, "RealizationMatrix")
      .def(py::init([](int rows, int cols, const py::sequence& entries) {
             std::vector<Rational> e;
             for (const auto& item : entries) e.push_back(rational_from_py(item));
             return RealizationMatrix(rows, cols, std::move(e));
           }),
           py::arg("rows"), py::arg("cols"), py::arg("entries"))
      .def_property_readonly("rows", &RealizationMatrix::rows)
      .def_property_readonly("cols", &RealizationMatrix::cols)
      .def("entries",
           [](const RealizationMatrix& s) {
             py::list out;
             for (const auto& v : s.row_major()) out.append(v.str());
             return out;
           })
      .def("__eq__",
           [](const RealizationMatrix& a, const RealizationMatrix& b) { return a == b; });

  m.def("realization_pencil", [](const RealizationMatrix& L) {
    auto rp = realization_pencil(L);
    return py::make_tuple(rp.pencil, rp.bases);
  });

  py::class_<RankFunction>(m, "RankFunction")
      .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("ranks"))
      .def_readonly("n", &RankFunction::n)
      .def_readonly("ranks", &RankFunction::ranks)
      .def("__eq__", [](const RankFunction& a, const RankFunction& b) { return a == b; });

  m.def(
      "gurvits_rank",
      [](const HyperbolicContext& ctx, bool check_all_subsets, int max_ground) {
        return gurvits_rank(ctx, {check_all_subsets, max_ground});
      },
      py::arg("ctx"), py::arg("check_all_subsets") = false, py::arg("max_ground") = 16);
  m.def("is_polymatroid", [](const RankFunction& rk) {
    const auto r = is_polymatroid(rk);
    return py::make_tuple(r.polymatroid, r.matroid,
                          r.violation ? py::object(py::make_tuple(r.violation->first,
                                                                  r.violation->second))
                                      : py::none());
  });
  m.def("equals_uniform",
        [](const RankFunction& rk, int k, int n) { return equals_uniform(rk, {k, n}); });
  m.def("is_unimodular_realization", [](const RealizationMatrix& L, int k, int n) {
    return is_unimodular_realization(L, {k, n});
  });
  m.def(
      "search_unimodular",
      [](int k, int n, int max_bits, int jobs) {
        const auto res = search_unimodular({k, n}, max_bits, jobs);
        return py::make_tuple(res.witness ? py::object(py::cast(*res.witness)) : py::none(),
                              res.searched);
      },
      py::arg("k"), py::arg("n"), py::arg("max_bits") = 20, py::arg("jobs") = 1);
}
