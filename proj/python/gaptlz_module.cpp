// Python bindings: thin wrappers over the high-precision core. Scalars cross
// the boundary as doubles, high-precision results as decimal strings.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaptlz/asymptotics.hpp"
#include "gaptlz/cue.hpp"
#include "gaptlz/equilibrium.hpp"
#include "gaptlz/parametrix.hpp"
#include "gaptlz/sine_kernel.hpp"
#include "gaptlz/toeplitz.hpp"

namespace py = pybind11;
using namespace gaptlz;

namespace {

std::map<int, cplx> to_w(const std::map<int, std::complex<double>>& w) {
  std::map<int, cplx> out;
  for (const auto& [k, v] : w)
    out[k] = cplx(real_t(v.real()), real_t(v.imag()));
  return out;
}

bool sym_real(const std::map<int, cplx>& w) {
  for (const auto& [k, v] : w) {
    auto it = w.find(-k);
    if (v.im != 0 || it == w.end() || it->second.re != v.re) return false;
  }
  return true;
}

SymbolSpec build_spec(double theta0, double s,
                      const std::map<int, std::complex<double>>& w) {
  std::map<int, cplx> wc = to_w(w);
  if (wc.empty()) return SymbolSpec(real_t(theta0), cplx(real_t(s)));
  return SymbolSpec(real_t(theta0), cplx(1), cplx(real_t(s)), wc,
                    sym_real(wc));
}

}  // namespace

PYBIND11_MODULE(_gaptlz, m) {
  m.doc() = "Toeplitz determinants with gap symbols";

  m.def("x_critical",
        [](double theta0) {
          PrecisionGuard guard(128);
          return to_str(x_critical(real_t(theta0)), 25);
        },
        py::arg("theta0"), "critical gap exponent -2 ln tan(theta0/4)");

  m.def("log_det",
        [](double theta0, double s, int n,
           const std::map<int, std::complex<double>>& w, unsigned precision) {
          SymbolSpec spec = build_spec(theta0, s, w);
          LogDetResult r = precision ? log_det(spec, n, precision)
                                     : log_det(spec, n);
          py::dict out;
          out["n"] = r.n;
          out["lndet_re"] = to_str(r.ln_D.re, 25);
          out["lndet_im"] = to_str(r.ln_D.im, 25);
          out["precision_bits"] = r.precision_bits;
          return out;
        },
        py::arg("theta0"), py::arg("s"), py::arg("n"),
        py::arg("w") = std::map<int, std::complex<double>>{},
        py::arg("precision") = 0,
        "ln det of the n x n Toeplitz matrix of the gap symbol");

  m.def("widom_expansion",
        [](double theta0, const std::map<int, std::complex<double>>& w, int n) {
          PrecisionGuard guard(128);
          ExpansionValue v = widom_expansion(real_t(theta0), to_w(w), n, 64);
          return std::pair(to_str(v.value.re, 25), to_str(v.truncation_bound, 10));
        },
        py::arg("theta0"), py::arg("w"), py::arg("n"));

  m.def("szego_expansion",
        [](const std::map<int, std::complex<double>>& w, int n) {
          PrecisionGuard guard(128);
          ExpansionValue v = szego_expansion(to_w(w), n);
          return to_str(v.value.re, 25);
        },
        py::arg("w"), py::arg("n"));

  m.def("fisher_hartwig_expansion",
        [](double s, double theta0,
           const std::map<int, std::complex<double>>& w, int n) {
          PrecisionGuard guard(128);
          ExpansionValue v =
              fisher_hartwig_expansion(real_t(s), real_t(theta0), to_w(w), n);
          return to_str(v.value.re, 25);
        },
        py::arg("s"), py::arg("theta0"), py::arg("w"), py::arg("n"));

  m.def("fredholm_logdet",
        [](double y, double s) {
          PrecisionGuard guard(128);
          FredholmSpec spec{real_t(y), real_t(s)};
          return to_str(fredholm_logdet(spec), 25);
        },
        py::arg("y"), py::arg("s") = 0.0,
        "ln det(1 - (1-s) K_y) for the sine kernel on (-y, y)");

  m.def("large_gap_expansion",
        [](double y) {
          PrecisionGuard guard(128);
          return to_str(large_gap_expansion(real_t(y)), 25);
        },
        py::arg("y"));

  m.def("count_distribution",
        [](double theta0, int n) {
          PrecisionGuard guard(128);
          CountDistribution d = count_distribution(real_t(theta0), n);
          std::vector<double> probs;
          for (const real_t& p : d.probs)
            probs.push_back(p.convert_to<double>());
          return probs;
        },
        py::arg("theta0"), py::arg("n"),
        "eigenvalue-count distribution on the arc |theta| < theta0");

  m.def("tail_bound",
        [](double theta0, int n, int p) {
          PrecisionGuard guard(128);
          return to_str(tail_bound(real_t(theta0), n, p), 25);
        },
        py::arg("theta0"), py::arg("n"), py::arg("p"));

  m.def("equilibrium",
        [](double theta0, py::object x) {
          PrecisionGuard guard(128);
          real_t xv = x.is_none() ? real_infinity()
                                  : real_t(x.cast<double>());
          EquilibriumData d = equilibrium_solve(real_t(theta0), xv, 128);
          py::dict out;
          out["regime"] = regime_name(d.regime);
          out["theta1"] = to_str(d.theta1, 25);
          out["ell"] = to_str(d.ell, 25);
          out["x_c"] = to_str(d.x_c, 25);
          return out;
        },
        py::arg("theta0"), py::arg("x") = py::none());

  m.def("parametrix_residual",
        [](double theta0, int n, const std::string& object,
           std::complex<double> point, double offset) {
          PrecisionGuard guard(128);
          real_t th0(theta0);
          ParametrixContext ctx(th0, {}, n, x_critical(th0));
          JumpObject obj;
          if (object == "S") obj = JumpObject::S;
          else if (object == "P") obj = JumpObject::P;
          else if (object == "Psi") obj = JumpObject::Psi;
          else if (object == "PsiHat") obj = JumpObject::PsiHat;
          else if (object == "Pinf") obj = JumpObject::Pinf;
          else throw DomainError("unknown jump object " + object);
          cplx z(real_t(point.real()), real_t(point.imag()));
          return to_str(jump_residual(ctx, obj, z, real_t(offset)), 25);
        },
        py::arg("theta0"), py::arg("n"), py::arg("object"), py::arg("point"),
        py::arg("offset"),
        "jump residual of a steepest-descent object at a contour point");
}
