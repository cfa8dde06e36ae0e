#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "nek/common.hpp"
#include "nek/contour.hpp"
#include "nek/nekrasov.hpp"
#include "nek/partitions.hpp"
#include "nek/potential.hpp"
#include "nek/residue_comb.hpp"
#include "nek/virasoro.hpp"

namespace py = pybind11;
using namespace nek;

namespace {

using Parts = std::vector<int>;

Parts to_parts(const Partition& p) { return Parts(p.parts().begin(), p.parts().end()); }

MultiPartition to_tuple(const std::vector<Parts>& comps) {
  MultiPartition V;
  for (const auto& c : comps) V.components.emplace_back(c);
  return V;
}

Form to_form(const std::string& s) {
  if (s == "N") return Form::N;
  if (s == "M") return Form::M;
  throw Error(ErrorKind::InvalidArgument, "form must be 'N' or 'M'");
}

MultiplicativeParams params(cplx q1, cplx q2, std::vector<cplx> u, std::vector<cplx> p) {
  return {q1, q2, std::move(u), std::move(p)};
}

TorusFunction observable(const std::string& name) {
  if (name == "cos") return [](double t) { return std::cos(t); };
  if (name == "cos2") return [](double t) { return std::cos(2.0 * t); };
  if (name == "sin") return [](double t) { return std::sin(t); };
  throw Error(ErrorKind::InvalidArgument, "observable must be cos, cos2 or sin");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Instanton partition functions, contour integrals and the deformed Virasoro algebra";

  static py::exception<Error> nek_error(m, "NekError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = nek_error;
      py::object exc = err(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(nek_error.ptr(), exc.ptr());
    }
  });

  m.def("set_max_threads", &set_max_threads, py::arg("n"));

  // partitions
  m.def("enumerate_partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(to_parts(p));
    return out;
  }, py::arg("n"));
  m.def("enumerate_tuples", [](int r, int n) {
    std::vector<std::vector<Parts>> out;
    for (const auto& V : enumerate_tuples(r, n)) {
      std::vector<Parts> comps;
      for (const auto& Y : V.components) comps.push_back(to_parts(Y));
      out.push_back(std::move(comps));
    }
    return out;
  }, py::arg("r"), py::arg("n"));
  m.def("arm", [](const Parts& Y, int x, int y) { return arm(Partition(Y), {x, y}); });
  m.def("leg", [](const Parts& Y, int x, int y) { return leg(Partition(Y), {x, y}); });
  m.def("hook", [](const Parts& Y, int x, int y) { return hook(Partition(Y), {x, y}); });

  // fixed-point sums
  m.def("zn_multiplicative",
        [](cplx q1, cplx q2, std::vector<cplx> u, std::vector<cplx> p, int n, const std::string& form) {
          return zn_multiplicative(params(q1, q2, std::move(u), std::move(p)), n, to_form(form));
        },
        py::arg("q1"), py::arg("q2"), py::arg("u"), py::arg("p") = std::vector<cplx>{}, py::arg("n"),
        py::arg("form") = "N");
  m.def("zn_exponential",
        [](double lambda, cplx eps1, cplx eps2, std::vector<cplx> a, std::vector<cplx> w, int n) {
          ExponentialParams ep;
          ep.lambda = lambda;
          ep.eps1 = eps1;
          ep.eps2 = eps2;
          ep.a = std::move(a);
          ep.w = std::move(w);
          return zn_exponential(ep, n);
        },
        py::arg("lam"), py::arg("eps1"), py::arg("eps2"), py::arg("a"), py::arg("w") = std::vector<cplx>{},
        py::arg("n"));
  m.def("zn_homological", &zn_homological, py::arg("eps1"), py::arg("eps2"), py::arg("a"), py::arg("n"));
  m.def("zn_gaiotto", &zn_gaiotto, py::arg("q"), py::arg("t"), py::arg("Q"), py::arg("n"));
  m.def("gaiotto_norm_from_pairs", &gaiotto_norm_from_pairs, py::arg("q"), py::arg("t"), py::arg("Q"),
        py::arg("n"));
  m.def("radius_bound", [](cplx q1, cplx q2, std::vector<cplx> u, std::vector<cplx> p) {
    return radius_bound(params(q1, q2, std::move(u), std::move(p)));
  }, py::arg("q1"), py::arg("q2"), py::arg("u"), py::arg("p") = std::vector<cplx>{});

  // contour integrals
  m.def("zn_quadrature",
        [](cplx q1, cplx q2, std::vector<cplx> u, std::vector<cplx> p, int n, int M) {
          const auto r = zn_quadrature(params(q1, q2, std::move(u), std::move(p)), n, M);
          return py::make_tuple(r.value, r.est_error);
        },
        py::arg("q1"), py::arg("q2"), py::arg("u"), py::arg("p") = std::vector<cplx>{}, py::arg("n"),
        py::arg("M") = 64, "Returns (value, estimated error).");
  m.def("a_n_series", &a_n_series, py::arg("q1"), py::arg("q2"), py::arg("N"));
  m.def("a_n_quadrature", [](cplx q1, cplx q2, int n, int M) { return a_n_quadrature(q1, q2, n, M).value; },
        py::arg("q1"), py::arg("q2"), py::arg("n"), py::arg("M") = 64);

  // potential theory
  m.def("g_sigma", &g_sigma, py::arg("theta"), py::arg("sigma"));
  m.def("fourier_g", &fourier_g, py::arg("sigma"), py::arg("k"));
  m.def("fourier_f", &fourier_f, py::arg("k"), py::arg("q1"), py::arg("q2"));
  m.def("f_potential", &f_potential, py::arg("theta"), py::arg("q1"), py::arg("q2"));
  m.def("estimate_h_limit",
        [](const std::string& obs, int n, cplx q1, cplx q2, std::int64_t records, std::int64_t burn_in,
           std::uint64_t seed, int chains) {
          LogGasConfig cfg;
          cfg.n = n;
          cfg.q1 = q1;
          cfg.q2 = q2;
          cfg.burn_in = burn_in;
          cfg.steps = burn_in + records * cfg.effective_stride();
          cfg.seed = seed;
          cfg.chains = chains;
          const auto h = observable(obs);
          HLimitEstimate est;
          {
            py::gil_scoped_release release;
            est = estimate_h_limit(h, cfg);
          }
          py::dict d;
          d["estimate"] = est.estimate;
          d["std_error"] = est.std_error;
          d["samples"] = est.samples;
          d["acceptance_rate"] = est.acceptance_rate;
          d["autocorrelation_time"] = est.autocorrelation_time;
          d["mixing_ok"] = est.mixing_ok;
          d["mean_energy"] = est.mean_energy;
          return d;
        },
        py::arg("observable") = "cos", py::arg("n") = 16, py::arg("q1") = cplx(0.3), py::arg("q2") = cplx(0.2),
        py::arg("records") = 2000, py::arg("burn_in") = 20000, py::arg("seed") = 1, py::arg("chains") = 1);

  // deformed Virasoro algebra
  m.def("r_coefficients", &r_coefficients, py::arg("q"), py::arg("t"), py::arg("L"));
  m.def("kac_zeros", &kac_zeros, py::arg("n"), py::arg("q"), py::arg("t"));
  m.def("shapovalov_matrix", [](int n, cplx q, cplx t, cplx h) {
    const auto K = shapovalov_matrix(n, AlgebraParams{q, t, h});
    std::vector<Parts> basis;
    for (const auto& p : K.basis) basis.push_back(to_parts(p));
    return py::make_tuple(basis, Eigen::MatrixXcd(K.entries));
  }, py::arg("n"), py::arg("q"), py::arg("t"), py::arg("h"), "Returns (basis, matrix).");
  m.def("gaiotto_norm_coefficient", [](int n, cplx q, cplx t, cplx Q) {
    return gaiotto_norm_coefficient(n, AlgebraParams{q, t, highest_weight_from_Q(Q)});
  }, py::arg("n"), py::arg("q"), py::arg("t"), py::arg("Q"));
  m.def("gaiotto_radius", &gaiotto_radius, py::arg("q"), py::arg("t"));
  m.def("highest_weight_from_Q", &highest_weight_from_Q, py::arg("Q"));

  // combinatorial identities
  m.def("cancellation_sum", [](int J, int l0) { return py::int_(py::str(cancellation_sum(J, l0).str())); },
        py::arg("J"), py::arg("l0"));
  m.def("telescoping_check", [](const std::vector<double>& x) {
    const auto r = telescoping_check(x);
    return py::make_tuple(r.lhs, r.rhs);
  }, py::arg("x"));
  m.def("step_ratio_check", [](cplx q1, cplx q2, std::vector<cplx> u, const std::vector<Parts>& V) {
    const auto s = step_ratio_check(params(q1, q2, std::move(u), {}), to_tuple(V));
    return py::make_tuple(s.lhs, s.rhs, s.direct);
  }, py::arg("q1"), py::arg("q2"), py::arg("u"), py::arg("V"));
}
