// Acceptance runner: twelve end-to-end criteria with pinned tolerances, one
// verdict line each, exercising the library directly and the CLI binary as a
// subprocess.
//
//   connkit_acceptance --cli <path> --fixtures <dir> --malformed <dir>
//
// Exit code 0 iff every criterion passes.  Criterion 7 includes a negative
// control that is structurally unattainable on the shipped two-dimensional
// fixture; it is reported red with an explanation rather than weakened, and
// a clearly labelled supplementary three-dimensional control demonstrates
// the detector itself.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "connkit/cartan.hpp"
#include "connkit/catalog.hpp"
#include "connkit/config.hpp"
#include "connkit/errors.hpp"
#include "connkit/expr.hpp"
#include "connkit/expr_field.hpp"
#include "connkit/exterior.hpp"
#include "connkit/fields.hpp"
#include "connkit/frame.hpp"
#include "connkit/numfmt.hpp"
#include "connkit/random_fields.hpp"
#include "connkit/rng.hpp"
#include "connkit/structures.hpp"

using namespace connkit;

namespace {

int g_pass = 0;
int g_fail = 0;

void line(int num, bool ok, const std::string& text) {
  ++(ok ? g_pass : g_fail);
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, text.c_str());
}

void note(const std::string& text) { std::printf("        %s\n", text.c_str()); }

std::string fmt(double v) { return format_double(v); }

void acc(double& worst, double v) {
  if (v > worst) worst = v;
}

// Every random draw in this runner comes from substream(kSeed, tag) with
// tag = criterion*100000 + fixture_index*10000 + sample, so criteria never
// share a stream and each is reproducible in isolation.
constexpr std::uint64_t kSeed = 2026;

SplitMix64 stream(int criterion, int fixture_index, int sample) {
  return substream(kSeed, static_cast<std::uint64_t>(criterion) * 100000 +
                              static_cast<std::uint64_t>(fixture_index) * 10000 +
                              static_cast<std::uint64_t>(sample));
}

CompiledConfig fixture(const char* name) {
  const FixtureEntry* e = find_fixture(name);
  if (!e) throw Error(std::string("missing built-in fixture: ") + name);
  return compile_config(parse_config(e->text, std::string(name) + ".toml"));
}

const char* const kFixtureNames[3] = {"flat2d", "sphere_lc", "relative_weitzenbock"};

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* p = ::popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  int st = ::pclose(p);
  if (WIFEXITED(st)) r.exit_code = WEXITSTATUS(st);
  return r;
}

// ---- criterion 1: the flat fixture vanishes --------------------------------

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  CompiledConfig cc = fixture("flat2d");
  TorsionFamily tf = torsion_family(cc.G, cc.active_frame);
  CurvatureFamily cf = curvature_family(cc.G, cc.active_frame);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    SplitMix64 g = stream(1, 0, k);
    Point p = random_point(cc.chart, g);
    VectorField a = random_vector_field(2, g);
    VectorField b = random_vector_field(2, g);
    VectorField c = random_vector_field(2, g);
    FormField w = random_form_field(2, g);
    acc(worst, max_abs(tf.tau(a, b).at(p)));
    acc(worst, max_abs(tf.theta(w, p)));
    acc(worst, max_abs(cf.rho(a, b, c).at(p)));
    acc(worst, max_abs(cf.omega(c, w, p)));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = worst <= 1e-12 && secs < 1.0;
  line(1, ok,
       "flat fixture: torsion and curvature families vanish (worst " + fmt(worst) +
           " <= 1e-12 at 100 points, " + fmt(secs) + " s < 1 s)");
}

// ---- criterion 2: sphere spot values ----------------------------------------

void criterion2() {
  CompiledConfig cc = fixture("sphere_lc");
  CurvatureFamily cf = curvature_family(cc.G);
  const VectorField e1 = VectorField::coordinate_basis(2, 0);
  const VectorField e2 = VectorField::coordinate_basis(2, 1);
  double worst_rel = 0.0;
  for (int k = 0; k < 20; ++k) {
    SplitMix64 g = stream(2, 0, k);
    Point p{{g.uniform(0.3, 2.8), g.uniform(0.1, 6.2)}};
    const double s2 = std::sin(p.x[0]) * std::sin(p.x[0]);
    Vector r = cf.rho(e1, e2, e2).at(p);
    acc(worst_rel, std::abs(r.c[0] - s2) / s2);
    acc(worst_rel, std::abs(r.c[1]) / s2);
  }
  const double pi = std::acos(-1.0);
  Vector d = cc.G.cov_deriv_vector(e2, e2).at(Point{{pi / 3.0, 1.0}});
  const double nabla_err =
      std::max(std::abs(d.c[0] + std::sqrt(3.0) / 4.0), std::abs(d.c[1]));
  const bool ok = worst_rel <= 1e-9 && nabla_err <= 1e-10;
  line(2, ok,
       "sphere oracle: rho(e1,e2,e2) = sin(th)^2 e1 (rel " + fmt(worst_rel) +
           " <= 1e-9 at 20 points); nabla_{e2}e2 at th=pi/3 = -(sqrt(3)/4) e1 (err " +
           fmt(nabla_err) + " <= 1e-10)");
}

// ---- criterion 3: first structure equation ----------------------------------

void criterion3() {
  double worst = 0.0;
  double worst_route = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    TorsionFamily tf = torsion_family(cc.G);
    for (int k = 0; k < 50; ++k) {
      SplitMix64 g = stream(3, fi, k);
      Point p = random_point(cc.chart, g);
      FormField w = random_form_field(2, g);
      acc(worst, max_abs(cartan_first_residual(cc.G, w, p)));
      if (fi == 2) {
        // The torsionful fixture admits a closed coframe-differential form of
        // the torsion 2-form; both sides of the structure equation must agree
        // with it independently.
        RelativeStructure rs{cc.active_frame, cc.G};
        KForm ref = relative_theta_route(rs, w, p);
        acc(worst_route, max_abs(tf.theta(w, p) - ref));
        acc(worst_route, max_abs(cartan_first_rhs(cc.G, w, p) - ref));
      }
    }
  }
  const bool ok = worst <= 1e-9 && worst_route <= 1e-9;
  line(3, ok,
       "first structure equation on all fixtures (residual " + fmt(worst) +
           " <= 1e-9, 50 forms each); both sides match the coframe-differential route "
           "on the relative fixture (err " +
           fmt(worst_route) + " <= 1e-9)");
}

// ---- criterion 4: second structure equation ---------------------------------

void criterion4() {
  double worst = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    for (int k = 0; k < 50; ++k) {
      SplitMix64 g = stream(4, fi, k);
      Point p = random_point(cc.chart, g);
      VectorField c = random_vector_field(2, g);
      FormField w = random_form_field(2, g);
      acc(worst, max_abs(cartan_second_residual(cc.G, c, w, p)));
    }
  }
  line(4, worst <= 1e-9,
       "second structure equation on all fixtures (residual " + fmt(worst) +
           " <= 1e-9, 50 (c, w) pairs each)");
}

// ---- criterion 5: duality adjoints ------------------------------------------

void criterion5() {
  double worst = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    AdjointCheck a = duality_adjoint_residuals(
        cc.G, cc.chart, 100, kSeed, 500000 + static_cast<std::uint64_t>(fi) * 10000);
    acc(worst, a.torsion);
    acc(worst, a.curvature);
  }
  line(5, worst <= 1e-10,
       "duality adjoints: torsion and curvature pairings transpose (worst " + fmt(worst) +
           " <= 1e-10, 100 samples per fixture)");
}

// ---- criterion 6: complement and inversion ----------------------------------

void criterion6() {
  double worst = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    const FramePair& fr = cc.active_frame;
    for (int k = 0; k < 100; ++k) {
      SplitMix64 g = stream(6, fi, k);
      Point p = random_point(cc.chart, g);
      VectorField a = random_vector_field(2, g);
      VectorField v = random_vector_field(2, g);
      FormField w = random_form_field(2, g);

      // Complement: Gp(v, w) + Gm(v, w) = d<w, v>.
      FormField sum = gamma_plus(cc.G, v, w) + gamma_minus(cc.G, v, w);
      acc(worst, max_abs((sum - differential(pairing_field(w, v), 2)).at(p)));

      // Inversions: the covariant derivative reconstructed from either Cartan
      // connection over the active frame.
      VectorField rv = VectorField::zero(2);
      for (int s = 0; s < 2; ++s)
        rv = rv + pairing_field(gamma_plus(cc.G, v, fr.beta[static_cast<std::size_t>(s)], fr),
                                a) *
                      fr.b[static_cast<std::size_t>(s)];
      acc(worst, max_abs((rv - cc.G.cov_deriv_vector(a, v)).at(p)));

      FormField rw = FormField::zero(2);
      for (int s = 0; s < 2; ++s)
        rw = rw + pairing_field(gamma_minus(cc.G, fr.b[static_cast<std::size_t>(s)], w, fr),
                                a) *
                      fr.beta[static_cast<std::size_t>(s)];
      acc(worst, max_abs((rw - cc.G.cov_deriv_form(a, w)).at(p)));
    }
  }
  line(6, worst <= 1e-10,
       "complement Gp + Gm = d<w,v> and both covariant-derivative reconstructions (worst " +
           fmt(worst) + " <= 1e-10, 100 samples per fixture)");
}

// ---- criterion 7: symmetric-structure identities ----------------------------

void criterion7() {
  // Curved symmetric fixture: both identities hold.
  CompiledConfig sph = fixture("sphere_lc");
  double cyc = 0.0, bia = 0.0;
  for (int k = 0; k < 30; ++k) {
    SplitMix64 g = stream(7, 0, k);
    Point p = random_point(sph.chart, g);
    VectorField a = random_vector_field(2, g);
    VectorField b = random_vector_field(2, g);
    VectorField c = random_vector_field(2, g);
    VectorField w = random_vector_field(2, g);
    acc(cyc, max_abs(cyclic_residual(sph.G, a, b, c, p)));
    acc(bia, max_abs(bianchi_residual(sph.G, w, a, b, c, p)));
  }

  // Negative control: the torsionful fixture should break the cyclic
  // identity.  Measured residual, honestly reported.
  CompiledConfig wei = fixture("relative_weitzenbock");
  double neg = 0.0;
  for (int k = 0; k < 30; ++k) {
    SplitMix64 g = stream(7, 1, k);
    Point p = random_point(wei.chart, g);
    VectorField a = random_vector_field(2, g);
    VectorField b = random_vector_field(2, g);
    VectorField c = random_vector_field(2, g);
    acc(neg, max_abs(cyclic_residual(wei.G, a, b, c, p)));
  }

  const bool identities_ok = cyc <= 1e-8 && bia <= 1e-8;
  const bool control_ok = neg > 1e-3;
  line(7, identities_ok && control_ok,
       "symmetric-structure identities: sphere cyclic " + fmt(cyc) +
           " <= 1e-8 and differential " + fmt(bia) +
           " <= 1e-8 at 30 tuples; torsionful negative control " + fmt(neg) +
           " > 1e-3 required");
  if (!control_ok) {
    note("the negative control cannot trip on the shipped torsionful fixture, for two");
    note("independent reasons: (a) its connection is relative, and every relative");
    note("connection is flat, so each curvature term of the cyclic sum is identically");
    note("zero; (b) in dimension 2 the cyclic curvature sum vanishes for *any*");
    note("connection - curvature is tensorial and antisymmetric in its first two");
    note("slots, which forces the cyclic sum over three dependent vector fields to");
    note("cancel termwise.  The criterion is reported red rather than weakened.");

    // Supplementary control, outside the numbered criterion: a 3-d torsionful
    // connection where the same detector does trip.
    Chart c3 = Chart::box({"x1", "x2", "x3"}, {0.5, 0.5, 0.5}, {2.0, 2.0, 2.0});
    std::vector<ScalarField> coeffs(27);
    coeffs[0 * 9 + 1 * 3 + 2] = ScalarField::coordinate(0);  // direction d2, argument d3
    Connection g3(FramePair::coordinate_frame(3), std::move(coeffs));
    VectorField f1 = VectorField::coordinate_basis(3, 0);
    VectorField f2 = VectorField::coordinate_basis(3, 1);
    VectorField f3 = VectorField::coordinate_basis(3, 2);
    double sup = max_abs(cyclic_residual(g3, f1, f2, f3, Point{{1.2, 0.8, 1.5}}));
    for (int k = 0; k < 10; ++k) {
      SplitMix64 g = stream(7, 2, k);
      Point p = random_point(c3, g);
      acc(sup, max_abs(cyclic_residual(g3, random_vector_field(3, g),
                                       random_vector_field(3, g),
                                       random_vector_field(3, g), p)));
    }
    note("supplementary (not part of the criterion): a 3-d torsionful connection");
    note("drives the same detector to cyclic residual " + fmt(sup) + " > 1e-3 -> " +
         (sup > 1e-3 ? "PASS" : "FAIL"));
  }
}

// ---- criterion 8: deformations ----------------------------------------------

void criterion8() {
  double worst = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    const Deformation& d = cc.deformation;
    Connection gl = deform(cc.G, d);
    for (int k = 0; k < 50; ++k) {
      SplitMix64 g = stream(8, fi, k);
      Point p = random_point(cc.chart, g);
      VectorField a = random_vector_field(2, g);
      VectorField v = random_vector_field(2, g);
      FormField w = random_form_field(2, g);
      VectorField lhs_v = gl.cov_deriv_vector(a, v);
      VectorField rhs_v = d.apply(cc.G.cov_deriv_vector(a, d.apply_inverse(v)));
      acc(worst, max_abs((lhs_v - rhs_v).at(p)));
      FormField lhs_w = gl.cov_deriv_form(a, w);
      FormField rhs_w = d.adjoint_inverse(cc.G.cov_deriv_form(a, d.adjoint(w)));
      acc(worst, max_abs((lhs_w - rhs_w).at(p)));
    }
  }

  // Bridge: deforming the flat connection by diag(1, x1) reproduces the
  // relative fixture's connection coefficientwise in coordinate components.
  CompiledConfig flat = fixture("flat2d");
  CompiledConfig wei = fixture("relative_weitzenbock");
  OperatorField lam(2, {ScalarField::constant(1.0), ScalarField(), ScalarField(),
                        ScalarField::coordinate(0)});
  Connection bridged = deform(flat.G, Deformation::from_operator(lam));
  std::vector<ScalarField> wc = coeffs_in_frame(wei.G, FramePair::coordinate_frame(2));
  double bridge = 0.0;
  for (int k = 0; k < 50; ++k) {
    SplitMix64 g = stream(8, 3, k);
    Point p = random_point(flat.chart, g);
    for (int s = 0; s < 2; ++s)
      for (int m = 0; m < 2; ++m)
        for (int nu = 0; nu < 2; ++nu)
          acc(bridge, std::abs(bridged.coeff(s, m, nu).at(p) -
                               wc[static_cast<std::size_t>((s * 2 + m) * 2 + nu)].at(p)));
  }
  const bool ok = worst <= 1e-10 && bridge <= 1e-10;
  line(8, ok,
       "deformation laws for vectors and forms (worst " + fmt(worst) +
           " <= 1e-10, 50 samples per fixture); diag(1, x1) bridge from flat to the "
           "relative connection (worst " +
           fmt(bridge) + " <= 1e-10 at 50 points)");
}

// ---- criterion 9: relative, split, Jacobian ---------------------------------

void criterion9() {
  double worst = 0.0;
  double rel_rho = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    const FramePair& fr = cc.active_frame;
    RelativeStructure rs = relative_connection(fr);
    TorsionFamily rtf = torsion_family(rs.connection);
    CurvatureFamily rcf = curvature_family(rs.connection);
    SplitDecomposition sd = split(cc.G, fr);
    FramePair coord = FramePair::coordinate_frame(2);
    RelativeStructure crs = relative_connection(coord);
    JacobianField jf = jacobian(coord, fr);
    for (int k = 0; k < 50; ++k) {
      SplitMix64 g = stream(9, fi, k);
      Point p = random_point(cc.chart, g);
      VectorField a = random_vector_field(2, g);
      VectorField b = random_vector_field(2, g);
      VectorField v = random_vector_field(2, g);
      FormField w = random_form_field(2, g);

      // Relative structure: frame and coframe are parallel, the torsion
      // routes agree, and the curvature vanishes.
      for (int mu = 0; mu < 2; ++mu) {
        const auto m = static_cast<std::size_t>(mu);
        acc(worst, max_abs(rs.connection.cov_deriv_vector(a, fr.b[m]).at(p)));
        acc(worst, max_abs(rs.connection.cov_deriv_form(a, fr.beta[m]).at(p)));
      }
      acc(worst, max_abs(relative_tau_route(rs, a, b, p) - rtf.tau(a, b).at(p)));
      acc(worst, max_abs(relative_theta_route(rs, w, p) - rtf.theta(w, p)));
      acc(rel_rho, max_abs(rcf.rho(a, b, v).at(p)));

      // Split: covariant derivative = relative part + gamma, for both slots.
      const std::array<VectorField, 2> av{a, v};
      VectorField sv = sd.B.cov_deriv_vector(a, v) + sd.gamma.apply_vector(av, {});
      acc(worst, max_abs((cc.G.cov_deriv_vector(a, v) - sv).at(p)));
      OperatorField ga = split_gamma_operator(cc.G, fr, a);
      FormField sw = sd.B.cov_deriv_form(a, w) - ga.adjoint_apply(w);
      acc(worst, max_abs((cc.G.cov_deriv_form(a, w) - sw).at(p)));

      // Jacobian transport between the coordinate frame and the active frame.
      acc(worst, max_abs((jf.J.compose(jf.J_inv).apply(v) - v).at(p)));
      for (int mu = 0; mu < 2; ++mu) {
        const auto m = static_cast<std::size_t>(mu);
        acc(worst, max_abs((jf.J.apply(coord.b[m]) - fr.b[m]).at(p)));
        acc(worst, max_abs((jf.J_inv.adjoint_apply(coord.beta[m]) - fr.beta[m]).at(p)));
      }
      VectorField transported =
          jf.J.apply(crs.connection.cov_deriv_vector(a, jf.J_inv.apply(v)));
      acc(worst, max_abs((rs.connection.cov_deriv_vector(a, v) - transported).at(p)));
    }
  }
  const bool ok = worst <= 1e-10 && rel_rho <= 1e-10;
  line(9, ok,
       "relative structures, the split, and Jacobian transport (worst " + fmt(worst) +
           " <= 1e-10, 50 samples per fixture); relative curvature " + fmt(rel_rho) +
           " <= 1e-10");
}

// ---- criterion 10: frame independence ---------------------------------------

void criterion10() {
  double worst = 0.0;
  for (int fi = 0; fi < 3; ++fi) {
    CompiledConfig cc = fixture(kFixtureNames[fi]);
    TorsionFamily tf0 = torsion_family(cc.G);
    CurvatureFamily cf0 = curvature_family(cc.G);
    for (int k = 0; k < 50; ++k) {
      SplitMix64 g = stream(10, fi, k);
      FramePair fr2 = random_frame(2, g);
      Point p = random_point(cc.chart, g);
      VectorField v = random_vector_field(2, g);
      VectorField c = random_vector_field(2, g);
      FormField w = random_form_field(2, g);
      acc(worst, max_abs((gamma_plus(cc.G, v, w, fr2) - gamma_plus(cc.G, v, w)).at(p)));
      acc(worst, max_abs((gamma_minus(cc.G, v, w, fr2) - gamma_minus(cc.G, v, w)).at(p)));
      TorsionFamily tf2 = torsion_family(cc.G, fr2);
      CurvatureFamily cf2 = curvature_family(cc.G, fr2);
      acc(worst, max_abs(tf2.theta(w, p) - tf0.theta(w, p)));
      acc(worst, max_abs(cf2.omega(c, w, p) - cf0.omega(c, w, p)));
    }
  }
  line(10, worst <= 1e-9,
       "frame independence: Cartan connections and both 2-form families recomputed in "
       "random frames (worst " +
           fmt(worst) + " <= 1e-9, 50 points per fixture)");
}

// ---- criterion 11: the expression layer -------------------------------------

// The malformed-config corpus needs the CLI; each case must produce a
// positioned error and exit code 2.
bool malformed_corpus(const std::string& cli, const std::string& malformed_dir) {
  const char* files[] = {
      "missing_chart.toml",   "bad_dim.toml",        "coords_mismatch.toml",
      "box_inverted.toml",    "bad_coeff_key.toml",  "bad_expression.toml",
      "unbound_variable.toml", "relative_no_frame.toml", "duplicate_key.toml",
      "unknown_section.toml",
  };
  int ok_count = 0;
  for (const char* f : files) {
    CmdResult r = run_cmd(cli + " verify " + malformed_dir + "/" + f);
    // A positioned error looks like "...<file>:<line>:<col>: ...".
    bool positioned = false;
    for (std::size_t i = 0; i + 1 < r.output.size(); ++i) {
      if (r.output[i] != ':' || !std::isdigit(static_cast<unsigned char>(r.output[i + 1])))
        continue;
      std::size_t j = i + 1;
      while (j < r.output.size() && std::isdigit(static_cast<unsigned char>(r.output[j]))) ++j;
      if (j + 1 < r.output.size() && r.output[j] == ':' &&
          std::isdigit(static_cast<unsigned char>(r.output[j + 1]))) {
        positioned = true;
        break;
      }
    }
    if (r.exit_code == 2 && positioned) ++ok_count;
    else note(std::string("malformed case ") + f + ": exit " + std::to_string(r.exit_code) +
              (positioned ? "" : ", no line:column position") + " -- expected exit 2 + position");
  }
  return ok_count == 10;
}

void criterion11(const std::string& cli, const std::string& malformed_dir) {
  const std::vector<std::string> vars{"x1", "x2"};

  // Golden parse trees: the canonical dumps are a compatibility contract.
  const struct {
    const char* src;
    const char* tree;
  } golden[] = {
      {"1+2*3", "(+ 1 (* 2 3))"},
      {"(1+2)*3", "(* (+ 1 2) 3)"},
      {"1-2-3", "(- (- 1 2) 3)"},
      {"1-(2-3)", "(- 1 (- 2 3))"},
      {"2^3^2", "(^ 2 (^i 3 2))"},
      {"x1^2", "(^i x1 2)"},
      {"x1^-2", "(^i x1 -2)"},
      {"x1^(2)", "(^i x1 2)"},
      {"x1^x2", "(^ x1 x2)"},
      {"pow(x1, 2)", "(^i x1 2)"},
      {"pow(x1, x2)", "(^ x1 x2)"},
      {"-x1^2", "(neg (^i x1 2))"},
      {"(-x1)^2", "(^i (neg x1) 2)"},
      {"-x1*x2", "(* (neg x1) x2)"},
      {"-(x1*x2)", "(neg (* x1 x2))"},
      {"--x1", "(neg (neg x1))"},
      {"sin(x1)*cos(x2)", "(* (sin x1) (cos x2))"},
      {"sin(cos(x1))", "(sin (cos x1))"},
      {"1/2/3", "(/ (/ 1 2) 3)"},
      {"1/(2/3)", "(/ 1 (/ 2 3))"},
      {"2*x1+3/x2-4", "(- (+ (* 2 x1) (/ 3 x2)) 4)"},
      {"2.5e-2", "0.025"},
      {"1e3", "1000"},
      {"sqrt(x1*x1+x2*x2)", "(sqrt (+ (* x1 x1) (* x2 x2)))"},
      {"exp(-x1)", "(exp (neg x1))"},
      {"log(x1)/log(2)", "(/ (log x1) (log 2))"},
      {"tan(x1/2)", "(tan (/ x1 2))"},
      {"x1 * ( x2 + 3 ) ^ 2", "(* x1 (^i (+ x2 3) 2))"},
      {"3-x1^2*5", "(- 3 (* (^i x1 2) 5))"},
      {"pow(2, -3)", "(^i 2 -3)"},
  };
  int golden_count = 0;
  int golden_bad = 0;
  for (const auto& c : golden) {
    ++golden_count;
    if (Expr::parse(c.src, vars).dump() != c.tree) ++golden_bad;
  }

  // Jet derivative against central finite differences on random
  // expression/point pairs drawn from a domain-safe pool (every entry is
  // smooth on [0.4, 1.9]^2 with margin for the stencil).
  const std::vector<std::string> pool{
      "sin(x1)*cos(x2)+x1^3",  "exp(x1/2)*log(x2+2)", "sqrt(x1*x1+x2*x2)",
      "pow(x1,2)/x2-tan(x1/3)", "x1^-2+x2^2",          "x1^x2",
      "cos(x1*x2)-sin(x2)/2",   "log(x1+x2)",          "1/(x1+x2)",
      "exp(-x1*x1)*sin(3*x2)",  "(x1+2)^3-x2*x1^2",    "tan(x2/4)+sqrt(x1)*x2",
  };
  double ad_worst = 0.0;
  const double h = 6e-6;
  for (int k = 0; k < 100; ++k) {
    SplitMix64 g = stream(11, 0, k);
    std::string src = pool[static_cast<std::size_t>(g.below(pool.size()))];
    switch (g.below(4)) {
      case 0: break;  // single entry
      case 1: src = "(" + src + ")+(" + pool[static_cast<std::size_t>(g.below(pool.size()))] + ")"; break;
      case 2: src = "(" + src + ")-(" + pool[static_cast<std::size_t>(g.below(pool.size()))] + ")"; break;
      default: src = "(" + src + ")*(" + pool[static_cast<std::size_t>(g.below(pool.size()))] + ")"; break;
    }
    Expr e = Expr::parse(src, vars);
    std::array<double, 2> x{g.uniform(0.4, 1.9), g.uniform(0.4, 1.9)};
    ValueAndPartials<double> vp = value_and_partials(field_from_expr(e), std::span<const double>(x));
    for (int i = 0; i < 2; ++i) {
      std::array<double, 2> hi = x, lo = x;
      hi[static_cast<std::size_t>(i)] += h;
      lo[static_cast<std::size_t>(i)] -= h;
      const double fd = (e.eval_real(hi) - e.eval_real(lo)) / (2.0 * h);
      acc(ad_worst, std::abs(vp.partials[static_cast<std::size_t>(i)] - fd));
    }
  }

  const bool corpus_ok = malformed_corpus(cli, malformed_dir);
  const bool ok = golden_bad == 0 && golden_count == 30 && ad_worst <= 1e-6 && corpus_ok;
  line(11, ok,
       "expression layer: " + std::to_string(golden_count - golden_bad) +
           "/30 golden parse trees byte-stable; jet derivative vs central differences " +
           fmt(ad_worst) +
           " <= 1e-6 over 100 random expression/point pairs; 10-case malformed-config "
           "corpus via the CLI " +
           (corpus_ok ? "all positioned with exit 2" : "FAILED (see notes)"));
}

// ---- criterion 12: byte determinism -----------------------------------------

void criterion12(const std::string& cli, const std::string& fixtures_dir) {
  const std::string cmd =
      cli + " verify " + fixtures_dir + "/sphere_lc.toml --seed 7 --format json";
  CmdResult a = run_cmd(cmd);
  CmdResult b = run_cmd(cmd);
  const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.output.empty() &&
                  a.output == b.output && a.output.front() == '{';
  line(12, ok,
       "two CLI runs of `verify sphere_lc.toml --seed 7 --format json` produce identical "
       "bytes (" +
           std::to_string(a.output.size()) + " bytes, exits " +
           std::to_string(a.exit_code) + "/" + std::to_string(b.exit_code) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"connkit acceptance runner"};
  std::string cli, fixtures_dir, malformed_dir;
  app.add_option("--cli", cli, "path to the connkit CLI binary")->required();
  app.add_option("--fixtures", fixtures_dir, "fixture directory")->required();
  app.add_option("--malformed", malformed_dir, "malformed-config directory")->required();
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11(cli, malformed_dir);
    criterion12(cli, fixtures_dir);
  } catch (const Error& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("\nacceptance: %d/%d criteria pass (%s s total)\n", g_pass, g_pass + g_fail,
              fmt(secs).c_str());
  if (g_fail > 0)
    std::printf("the red criterion's negative control is structurally unattainable on the "
                "shipped fixture; see the notes above.\n");
  return g_fail == 0 ? 0 : 1;
}
