#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <numbers>
#include <sstream>

#include "nek/contour.hpp"
#include "nek/nekrasov.hpp"
#include "nek/potential.hpp"
#include "nek/residue_comb.hpp"
#include "nek/sampling.hpp"
#include "nek/virasoro.hpp"

namespace nekcli {

using namespace nek;

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

json root_json(cplx value, int n) {
  if (n == 0) return 1.0;
  return std::pow(std::abs(value), 1.0 / n);
}

MultiplicativeParams multiplicative_from(const Config& c) {
  MultiplicativeParams mp;
  mp.q1 = c.complex("q1");
  mp.q2 = c.complex("q2");
  mp.u = c.complex_list("u");
  mp.p = c.complex_list("p");
  return mp;
}

const std::vector<KeySpec> kMultiplicativeKeys = {
    {"q1", "0.3,0.2", "first deformation parameter (re,im or r@phi)"},
    {"q2", "0.3,-0.2", "second deformation parameter"},
    {"u", "1", "Coulomb parameters, ';'-separated"},
    {"p", "", "matter parameters, ';'-separated"},
};

std::vector<KeySpec> with(std::vector<KeySpec> base, const std::vector<KeySpec>& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

void cmd_coeffs(const Config& c, Report& rep, std::ostream&) {
  const std::string family = c.str("family");
  const int nmax = c.integer("nmax");
  if (nmax < 0) throw Error(ErrorKind::InvalidArgument, "nmax must be nonnegative");
  const Form form = c.str("form") == "M" ? Form::M : Form::N;
  if (c.str("form") != "N" && c.str("form") != "M") throw Error(ErrorKind::InvalidArgument, "form must be N or M");

  std::function<cplx(int)> zn;
  json bound = nullptr;
  MultiplicativeParams mp;
  ExponentialParams ep;
  if (family == "multiplicative") {
    mp = multiplicative_from(c);
    check_admissible(mp);
    bound = radius_bound(mp);
    zn = [&](int n) { return zn_multiplicative(mp, n, form); };
  } else if (family == "exponential" || family == "homological") {
    ep.lambda = c.real("lambda");
    ep.eps1 = c.complex("eps1");
    ep.eps2 = c.complex("eps2");
    ep.a = c.complex_list("a");
    ep.w = c.complex_list("w");
    if (ep.a.empty()) throw Error(ErrorKind::InvalidArgument, "at least one Coulomb parameter a is required");
    if (family == "exponential") {
      check_admissible(ep);
      bound = radius_bound(to_multiplicative(ep));
      zn = [&](int n) { return zn_exponential(ep, n); };
    } else {
      if (!ep.w.empty()) throw Error(ErrorKind::InvalidArgument, "homological coefficients take no matter parameters");
      zn = [&](int n) { return zn_homological(ep.eps1, ep.eps2, ep.a, n); };
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "family must be multiplicative, exponential or homological");
  }
  for (int n = 0; n <= nmax; ++n) {
    const cplx v = zn(n);
    rep.rows.push_back({{"n", n}, {"value", to_json(v)}, {"root", root_json(v, n)}, {"bound", bound}});
  }
}

void cmd_quad(const Config& c, Report& rep, std::ostream&) {
  const MultiplicativeParams mp = multiplicative_from(c);
  check_admissible(mp);
  const int n = c.integer("n");
  const int M = c.integer("M");
  const double tol = c.real("tol");
  ContourSpec spec = choose_rho(mp, M);
  if (c.has("rho")) spec.rho = c.real("rho");
  const QuadratureResult q = zn_quadrature(mp, n, spec);
  const cplx exact = zn_multiplicative(mp, n, Form::N);
  const double rel = relative_difference(q.value, exact);
  rep.rows.push_back({{"n", n},
                      {"M", q.M},
                      {"rho", spec.rho},
                      {"quadrature", to_json(q.value)},
                      {"est_error", q.est_error},
                      {"combinatorial", to_json(exact)},
                      {"rel_diff", rel}});
  rep.check("quadrature matches fixed-point sum", rel < tol, "relative difference " + fmt(rel));
}

void cmd_gaiotto(const Config& c, Report& rep, std::ostream&) {
  const cplx q = c.complex("q");
  const cplx t = c.complex("t");
  cplx Q = c.complex("Q");
  AlgebraParams ap{q, t, highest_weight_from_Q(Q)};
  if (c.has("h")) {
    ap.h = c.complex("h");
    // Q^{1/2} solves s + 1/s = h.
    const cplx s = (ap.h + std::sqrt(ap.h * ap.h - 4.0)) / 2.0;
    Q = s * s;
  }
  const int nmax = c.integer("nmax");
  const double tol = c.real("tol");
  if (nmax < 0) throw Error(ErrorKind::InvalidArgument, "nmax must be nonnegative");
  const double bound = gaiotto_radius(q, t);
  VermaModule engine(ap, std::max(nmax, kDefaultLevelCap));
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const cplx kac = gaiotto_coefficients(n, engine).at(Partition(std::vector<int>(n, 1)));
    const cplx agt = gaiotto_norm_from_pairs(q, t, Q, n);
    const double rel = relative_difference(kac, agt);
    worst = std::max(worst, rel);
    rep.rows.push_back({{"n", n}, {"kac", to_json(kac)}, {"agt", to_json(agt)}, {"rel_diff", rel}, {"bound", bound}});
  }
  rep.check("Kac inverse matches pair sum", worst < tol, "max relative difference " + fmt(worst));
}

void cmd_potential(const Config& c, Report& rep, std::ostream&) {
  const cplx q1 = c.complex("q1");
  const cplx q2 = c.complex("q2");
  const int kmax = c.integer("kmax");
  const int M = c.integer("M");
  if (kmax < 0 || M < 8) throw Error(ErrorKind::InvalidArgument, "need kmax >= 0 and M >= 8");
  check_admissible(MultiplicativeParams{q1, q2, {1.0}, {}});
  double worst = 0.0;
  bool positive = true;
  cplx c0 = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    const cplx closed = fourier_f(k, q1, q2);
    const cplx quad = fourier_f_quadrature(k, q1, q2, M);
    const double diff = std::abs(closed - quad);
    worst = std::max(worst, diff);
    if (k == 0) c0 = closed;
    else if (!(closed.real() > 0.0 && std::abs(closed.imag()) <= 1e-12)) positive = false;
    rep.rows.push_back({{"k", k}, {"closed", to_json(closed)}, {"quadrature", to_json(quad)}, {"abs_diff", diff}});
  }
  rep.check("closed form matches quadrature", worst < 1e-7, "max difference " + fmt(worst));
  rep.check("c_k(f) > 0 for k != 0", positive, "");
  rep.check("c_0(f) = 0", std::abs(c0) < 1e-8, "|c_0| = " + fmt(std::abs(c0)));
}

TorusFunction observable(const std::string& name) {
  if (name == "cos") return [](double x) { return std::cos(x); };
  if (name == "cos2") return [](double x) { return std::cos(2.0 * x); };
  if (name == "sin") return [](double x) { return std::sin(x); };
  throw Error(ErrorKind::InvalidArgument, "observable must be cos, cos2 or sin");
}

void cmd_loggas(const Config& c, Report& rep, std::ostream& log) {
  const auto h = observable(c.str("observable"));
  for (const int n : c.int_list("n")) {
    LogGasConfig cfg;
    cfg.n = n;
    cfg.q1 = c.complex("q1");
    cfg.q2 = c.complex("q2");
    cfg.burn_in = c.int64("burn_in");
    cfg.seed = rep.seed;
    cfg.proposal_width = c.real("width");
    cfg.stride = c.integer("stride");
    cfg.chains = c.integer("chains");
    cfg.steps = cfg.burn_in + c.int64("records") * cfg.effective_stride();
    validate(cfg);
    const auto est = estimate_h_limit(h, cfg, c.real("eta"), c.integer("replicates"));
    rep.rows.push_back({{"n", n},
                        {"estimate", est.estimate},
                        {"std_error", est.std_error},
                        {"samples", est.samples},
                        {"acceptance_rate", est.acceptance_rate},
                        {"autocorrelation_time", est.autocorrelation_time},
                        {"mixing_ok", est.mixing_ok},
                        {"mean_energy", est.mean_energy},
                        {"eta", est.eta},
                        {"eta_fraction", est.eta_fraction}});
    rep.check("mixing n=" + std::to_string(n), est.mixing_ok,
              "acceptance " + fmt(est.acceptance_rate) + ", tau " + fmt(est.autocorrelation_time));
    log << "loggas n=" << n << " done\n";
  }
}

json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

void appendix_checks(int jmax, int tuples, int vmax, int draws, std::uint64_t seed, Report& rep, bool rows) {
  bool zero = true;
  for (int J = 1; J <= jmax; ++J) {
    for (int l0 = 0; l0 < J; ++l0) {
      const BigInt s = cancellation_sum(J, l0);
      if (l0 >= 1 && s != 0) zero = false;
      if (rows) rep.rows.push_back({{"J", J}, {"l0", l0}, {"cancellation_sum", bigint_json(s)}});
    }
  }
  rep.check("cancellation sum vanishes for l0 >= 1, J <= " + std::to_string(jmax), zero, "");

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < tuples; ++i) {
    std::vector<double> x(1 + i % 8);
    for (auto& v : x) v = uniform(rng, 0.01, 10.0);
    const auto r = telescoping_check(x);
    worst = std::max(worst, std::abs(r.lhs - r.rhs) / r.rhs);
  }
  rep.check("telescoping identity", worst < 1e-10, "max relative difference " + fmt(worst));

  worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    for (int r = 1; r <= 2; ++r) {
      const auto mp = random_admissible(rng, r, 0, d);
      for (int n = 1; n <= vmax; ++n) {
        for (const auto& V : enumerate_tuples(r, n)) {
          if (V.components.back().empty()) continue;
          const auto s = step_ratio_check(mp, V);
          worst = std::max({worst, relative_difference(s.lhs, s.rhs), relative_difference(s.lhs, s.direct)});
        }
      }
    }
  }
  rep.check("step ratio identity", worst < 1e-9, "max relative difference " + fmt(worst));
}

void cmd_appendix(const Config& c, Report& rep, std::ostream&) {
  const int jmax = c.integer("jmax");
  if (jmax < 1 || jmax > 14) throw Error(ErrorKind::InvalidArgument, "jmax must lie in [1, 14]");
  appendix_checks(jmax, c.integer("tuples"), c.integer("vmax"), c.integer("draws"), rep.seed, rep, true);
}

void cmd_verify(const Config& c, Report& rep, std::ostream& log) { run_verify_suite(c.str("suite"), rep.seed, rep, log); }

// ---- verify suites ----

void suite_residues(std::uint64_t seed, Report& rep) {
  std::mt19937_64 rng(seed);
  double quad_worst = 0.0, nm_worst = 0.0;
  for (int r = 1; r <= 2; ++r)
    for (int s = 0; s <= 1; ++s)
      for (int n = 1; n <= 2; ++n)
        for (int d = 0; d < 2; ++d) {
          const auto mp = random_admissible(rng, r, s, d);
          const auto q = zn_quadrature(mp, n, 64);
          quad_worst = std::max({quad_worst, relative_difference(q.value, zn_multiplicative(mp, n, Form::N)),
                                 relative_difference(q.value, zn_multiplicative(mp, n, Form::M))});
        }
  rep.check("residues: quadrature = fixed-point sum", quad_worst < 1e-8, "max relative difference " + fmt(quad_worst));
  for (int r = 1; r <= 2; ++r)
    for (int d = 0; d < 4; ++d) {
      const auto mp = random_admissible(rng, r, 1, d);
      for (int n = 1; n <= 4; ++n)
        nm_worst = std::max(nm_worst, relative_difference(zn_multiplicative(mp, n, Form::N), zn_multiplicative(mp, n, Form::M)));
    }
  rep.check("residues: N-form = M-form", nm_worst < 1e-10, "max relative difference " + fmt(nm_worst));
}

void suite_agt(std::uint64_t seed, Report& rep) {
  const cplx q = 2.0, t = 0.5, Q = std::polar(0.9, 0.3);
  double worst = 0.0;
  VermaModule engine(AlgebraParams{q, t, highest_weight_from_Q(Q)});
  for (int n = 1; n <= 3; ++n)
    worst = std::max(worst, relative_difference(gaiotto_coefficients(n, engine).at(Partition(std::vector<int>(n, 1))),
                                                gaiotto_norm_from_pairs(q, t, Q, n)));
  std::mt19937_64 rng(seed);
  for (int d = 0; d < 2; ++d) {
    const auto g = random_gaiotto(rng);
    VermaModule e(AlgebraParams{g.q, g.t, highest_weight_from_Q(g.Q)});
    for (int n = 1; n <= 3; ++n)
      worst = std::max(worst, relative_difference(gaiotto_coefficients(n, e).at(Partition(std::vector<int>(n, 1))),
                                                  gaiotto_norm_from_pairs(g.q, g.t, g.Q, n)));
  }
  rep.check("agt: Kac inverse = pair sum, n <= 3", worst < 1e-8, "max relative difference " + fmt(worst));
}

void suite_potential(Report& rep) {
  double worst = 0.0;
  for (const double sigma : {0.3, 0.5, 2.0})
    for (int k = -8; k <= 8; ++k) {
      const auto h = [sigma](double x) { return g_sigma(x, sigma); };
      worst = std::max(worst, std::abs(fourier_quadrature(h, k, 4096) - cplx(fourier_g(sigma, k))));
    }
  rep.check("potential: Fourier coefficients of g_sigma", worst < 1e-7, "max difference " + fmt(worst));
  bool positive = true;
  double c0 = 0.0;
  for (const auto& [q1, q2] : {std::pair<cplx, cplx>{cplx(0.3, 0.2), cplx(0.3, -0.2)}, {0.3, 0.2}}) {
    c0 = std::max(c0, std::abs(fourier_f(0, q1, q2)));
    for (int k = -8; k <= 8; ++k) {
      if (k == 0) continue;
      const cplx ck = fourier_f(k, q1, q2);
      if (!(ck.real() > 0.0 && std::abs(ck.imag()) <= 1e-12)) positive = false;
    }
  }
  rep.check("potential: c_k(f) > 0 and c_0(f) = 0", positive && c0 < 1e-8, "|c_0| = " + fmt(c0));
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"residues", "agt", "potential", "appendix", "all"};
  return names;
}

void run_verify_suite(const std::string& suite, std::uint64_t seed, Report& report, std::ostream& log) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  const auto timed = [&](const std::string& name, const std::function<void()>& fn) {
    if (suite != "all" && suite != name) return;
    const auto start = std::chrono::steady_clock::now();
    const std::size_t before = report.checks.size();
    fn();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = before; i < report.checks.size(); ++i)
      log << (report.checks[i].pass ? "PASS " : "FAIL ") << report.checks[i].name << '\n';
    log << "suite " << name << ": " << secs << " s\n";
  };
  timed("residues", [&] { suite_residues(seed, report); });
  timed("agt", [&] { suite_agt(seed, report); });
  timed("potential", [&] { suite_potential(report); });
  timed("appendix", [&] { appendix_checks(8, 100, 3, 2, seed, report, false); });
}

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"coeffs", "Coefficients Z_n of the instanton series",
       with(kMultiplicativeKeys,
            {{"family", "multiplicative", "multiplicative, exponential or homological"},
             {"form", "N", "N or M (multiplicative family)"},
             {"nmax", "6", "largest n"},
             {"lambda", "1", "scale of the exponential variables"},
             {"eps1", "0.5", "first equivariant parameter"},
             {"eps2", "0.7", "second equivariant parameter"},
             {"a", "0", "Coulomb parameters, ';'-separated"},
             {"w", "", "matter masses, ';'-separated"}}),
       cmd_coeffs},
      {"quad", "Contour-integral evaluation of Z_n",
       with(kMultiplicativeKeys,
            {{"n", "2", "number of integration variables"},
             {"M", "64", "points per circle (even)"},
             {"rho", "", "contour radius (default: chosen automatically)"},
             {"tol", "1e-8", "relative tolerance of the comparison"}}),
       cmd_quad},
      {"gaiotto", "Norm coefficients of the Gaiotto state, two ways",
       {{"q", "2", "algebra parameter q"},
        {"t", "0.5", "algebra parameter t"},
        {"Q", "0.9@0.3", "Coulomb parameter Q; h = Q^(1/2) + Q^(-1/2)"},
        {"h", "", "highest weight (overrides Q)"},
        {"nmax", "3", "largest level"},
        {"tol", "1e-8", "relative tolerance of the comparison"}},
       cmd_gaiotto},
      {"potential", "Fourier coefficients of the pair potential",
       {{"q1", "0.3,0.2", "first deformation parameter"},
        {"q2", "0.3,-0.2", "second deformation parameter"},
        {"kmax", "8", "largest |k|"},
        {"M", "4096", "quadrature points"}},
       cmd_potential},
      {"loggas", "Monte Carlo estimate of the scaled log-moment under the log-gas measure",
       {{"n", "16", "particle numbers, ','-separated"},
        {"q1", "0.3", "first deformation parameter"},
        {"q2", "0.2", "second deformation parameter"},
        {"records", "2000", "recorded configurations per chain"},
        {"burn_in", "20000", "discarded single-site updates"},
        {"stride", "0", "updates between records (0: 2n)"},
        {"chains", "1", "independent chains"},
        {"width", "0.7853981633974483", "full width of the uniform proposal"},
        {"observable", "cos", "cos, cos2 or sin"},
        {"eta", "0.1", "energy threshold for the reported fraction"},
        {"replicates", "200", "bootstrap replicates"}},
       cmd_loggas},
      {"appendix-check", "Cancellation, telescoping and step-ratio identities",
       {{"jmax", "8", "largest strip length"},
        {"tuples", "100", "random tuples for the telescoping identity"},
        {"vmax", "4", "largest tuple size for the step ratio"},
        {"draws", "3", "random parameter draws for the step ratio"}},
       cmd_appendix},
      {"verify", "Run a cross-validation suite",
       {{"suite", "all", "residues, agt, potential, appendix or all"}},
       cmd_verify},
  };
  return list;
}

}  // namespace nekcli
