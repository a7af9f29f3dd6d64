#include "connkit/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>

#include "connkit/cartan.hpp"
#include "connkit/errors.hpp"
#include "connkit/numfmt.hpp"
#include "connkit/random_fields.hpp"
#include "connkit/version.hpp"
#include "json.hpp"

namespace connkit {

namespace {

constexpr std::uint64_t kSuiteBlock = std::uint64_t{1} << 20;
constexpr std::uint64_t kAuxOffset = std::uint64_t{1} << 19;

struct Worst {
  double r = 0.0;
  Point p;
  bool seeded = false;

  void feed(double v, const Point& at) {
    if (!seeded) {
      r = v;
      p = at;
      seeded = true;
    } else if (v > r) {
      r = v;
      p = at;
    }
  }
};

double max_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// ---- the individual suites -------------------------------------------------
//
// Every runner receives the block base s·2^20 for its tag arithmetic and
// fills in `w` with the worst residual over its samples.

void run_axioms(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                Worst& w) {
  const Connection& G = cc.G;
  AxiomCheck ac = check_connection_axioms(
      [&G](const VectorField& a, const VectorField& v) { return G.cov_deriv_vector(a, v); },
      cc.chart, samples, seed, base);
  w.feed(ac.strong_linearity, ac.strong_worst);
  w.feed(ac.quasi_linearity, ac.quasi_worst);
  // Form-side quasi-linearity: D_a(f w) = a(f) w + f D_a w.
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + kAuxOffset + static_cast<std::uint64_t>(k));
    ScalarField f = random_scalar_field(n, g);
    FormField wf = random_form_field(n, g);
    VectorField a = random_vector_field(n, g);
    Point p = random_point(cc.chart, g);
    FormField lhs = G.cov_deriv_form(a, f * wf);
    FormField rhs = directional_derivative(a, f) * wf + f * G.cov_deriv_form(a, wf);
    w.feed(max_abs((lhs - rhs).at(p)), p);
  }
}

void run_complement(const CompiledConfig& cc, int samples, std::uint64_t seed,
                    std::uint64_t base, Worst& w) {
  const Connection& G = cc.G;
  const FramePair& active = cc.active_frame;
  const int n = G.dim();
  std::vector<FormField> forms = connection_forms(G);
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField v = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    // Gp + Gm = d<w, v>.
    FormField lhs = gamma_plus(G, v, wf, active) + gamma_minus(G, v, wf, active);
    FormField rhs = differential(pairing_field(wf, v), n);
    w.feed(max_abs((lhs - rhs).at(p)), p);
    // gamma^nu_mu = Gp(b_mu, beta^nu) = -Gm(b_mu, beta^nu) in G's own frame.
    const FramePair& own = G.frame();
    for (int nu = 0; nu < n; ++nu)
      for (int mu = 0; mu < n; ++mu) {
        const FormField& gnm = forms[static_cast<std::size_t>(nu * n + mu)];
        w.feed(max_abs((gnm - gamma_plus(G, own.b[static_cast<std::size_t>(mu)],
                                         own.beta[static_cast<std::size_t>(nu)], own))
                           .at(p)),
               p);
        w.feed(max_abs((gnm + gamma_minus(G, own.b[static_cast<std::size_t>(mu)],
                                          own.beta[static_cast<std::size_t>(nu)], own))
                           .at(p)),
               p);
      }
  }
}

void run_inversion(const CompiledConfig& cc, int samples, std::uint64_t seed,
                   std::uint64_t base, Worst& w) {
  const Connection& G = cc.G;
  const FramePair& fr = cc.active_frame;
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField v = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    // D_a v recovered from Gp: D_a v = <Gp(v, beta^s), a> b_s.
    VectorField rec = VectorField::zero(n);
    for (int s = 0; s < n; ++s)
      rec = rec + pairing_field(gamma_plus(G, v, fr.beta[static_cast<std::size_t>(s)], fr), a) *
                      fr.b[static_cast<std::size_t>(s)];
    w.feed(max_abs((rec - G.cov_deriv_vector(a, v)).at(p)), p);
    // D_a w recovered from Gm: D_a w = <Gm(b_nu, w), a> beta^nu.
    FormField recw = FormField::zero(n);
    for (int nu = 0; nu < n; ++nu)
      recw = recw +
             pairing_field(gamma_minus(G, fr.b[static_cast<std::size_t>(nu)], wf, fr), a) *
                 fr.beta[static_cast<std::size_t>(nu)];
    w.feed(max_abs((recw - G.cov_deriv_form(a, wf)).at(p)), p);
  }
}

void run_cartan1(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                 Worst& w) {
  const Connection& G = cc.G;
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    w.feed(max_abs(cartan_first_residual(G, wf, p)), p);
    for (int nu = 0; nu < n; ++nu) w.feed(max_abs(frame_torsion_residual(G, nu, p)), p);
  }
}

void run_cartan2(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                 Worst& w) {
  const Connection& G = cc.G;
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField c = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    w.feed(max_abs(cartan_second_residual(G, c, wf, p)), p);
    for (int nu = 0; nu < n; ++nu)
      for (int mu = 0; mu < n; ++mu) w.feed(max_abs(frame_curvature_residual(G, nu, mu, p)), p);
  }
}

void run_duality(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                 Worst& w) {
  AdjointCheck adj = duality_adjoint_residuals(cc.G, cc.chart, samples, seed, base);
  w.feed(adj.torsion, adj.torsion_worst);
  w.feed(adj.curvature, adj.curvature_worst);
}

void run_cyclic(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                Worst& w) {
  const Connection& G = cc.G;
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + kAuxOffset + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField b = random_vector_field(n, g);
    VectorField c = random_vector_field(n, g);
    Point p = random_point(cc.chart, g);
    w.feed(max_abs(cyclic_residual(G, a, b, c, p)), p);
  }
}

void run_bianchi(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                 Worst& w) {
  const Connection& G = cc.G;
  const int n = G.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + kAuxOffset + static_cast<std::uint64_t>(k));
    VectorField d = random_vector_field(n, g);
    VectorField a = random_vector_field(n, g);
    VectorField b = random_vector_field(n, g);
    VectorField c = random_vector_field(n, g);
    Point p = random_point(cc.chart, g);
    w.feed(max_abs(bianchi_residual(G, d, a, b, c, p)), p);
  }
}

void run_deformation(const CompiledConfig& cc, int samples, std::uint64_t seed,
                     std::uint64_t base, Worst& w) {
  const Connection& G = cc.G;
  const Deformation& d = cc.deformation;
  const int n = G.dim();
  DeformationCheck dc = check_deformation(d, cc.chart, samples, seed, base);
  w.feed(dc.inverse_residual, dc.worst);
  w.feed(dc.adjoint_residual, dc.worst);
  Connection Ghat = deform(G, d);
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + kAuxOffset + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField v = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    // Vector transport: D^λ_a v = λ(D_a λ⁻¹(v)).
    VectorField vl = Ghat.cov_deriv_vector(a, v);
    VectorField vr = d.apply(G.cov_deriv_vector(a, d.apply_inverse(v)));
    w.feed(max_abs((vl - vr).at(p)), p);
    // Form transport: D^λ_a w = λ^{-adj}(D_a λ^adj(w)).
    FormField fl = Ghat.cov_deriv_form(a, wf);
    FormField fr = d.adjoint_inverse(G.cov_deriv_form(a, d.adjoint(wf)));
    w.feed(max_abs((fl - fr).at(p)), p);
  }
}

void run_relative(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                  Worst& w) {
  RelativeStructure rs = relative_connection(cc.active_frame);
  TorsionFamily tf = torsion_family(rs.connection);
  CurvatureFamily cf = curvature_family(rs.connection);
  const int n = rs.connection.dim();
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField b = random_vector_field(n, g);
    VectorField c = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    // The frame and coframe are parallel.
    for (int mu = 0; mu < n; ++mu) {
      w.feed(max_abs(rs.connection.cov_deriv_vector(a, rs.frame.b[static_cast<std::size_t>(mu)])
                         .at(p)),
             p);
      w.feed(max_abs(rs.connection.cov_deriv_form(a, rs.frame.beta[static_cast<std::size_t>(mu)])
                         .at(p)),
             p);
    }
    // Closed-form torsion routes agree with the family.
    w.feed(max_diff(relative_tau_route(rs, a, b, p).c, tf.tau(a, b).at(p).c), p);
    w.feed(max_diff(relative_theta_route(rs, wf, p).components(),
                    tf.theta(wf, p).components()),
           p);
    // Relative structures are flat.
    w.feed(max_abs(cf.rho(a, b, c).at(p)), p);
  }
}

void run_split(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
               Worst& w) {
  const Connection& G = cc.G;
  const FramePair& fr = cc.active_frame;
  const int n = G.dim();
  SplitDecomposition sd = split(G, fr);
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField v = random_vector_field(n, g);
    FormField wf = random_form_field(n, g);
    Point p = random_point(cc.chart, g);
    // D_a v = del_a v + gamma(a, v).
    std::array<VectorField, 2> av{a, v};
    VectorField vl = G.cov_deriv_vector(a, v);
    VectorField vr = sd.B.cov_deriv_vector(a, v) + sd.gamma.apply_vector(av, {});
    w.feed(max_abs((vl - vr).at(p)), p);
    // D_a w = del_a w - gamma_a^adj(w).
    OperatorField ga = split_gamma_operator(G, fr, a);
    FormField fl = G.cov_deriv_form(a, wf);
    FormField frm = sd.B.cov_deriv_form(a, wf) - ga.adjoint_apply(wf);
    w.feed(max_abs((fl - frm).at(p)), p);
  }
}

void run_jacobian(const CompiledConfig& cc, int samples, std::uint64_t seed, std::uint64_t base,
                  Worst& w) {
  const int n = cc.G.dim();
  FramePair coord = FramePair::coordinate_frame(n);
  const FramePair& act = cc.active_frame;
  JacobianField jf = jacobian(coord, act);
  RelativeStructure ra = relative_connection(coord);
  RelativeStructure rb = relative_connection(act);
  for (int k = 0; k < samples; ++k) {
    SplitMix64 g = substream(seed, base + static_cast<std::uint64_t>(k));
    VectorField a = random_vector_field(n, g);
    VectorField v = random_vector_field(n, g);
    Point p = random_point(cc.chart, g);
    // J and its inverse cancel.
    w.feed(max_abs((jf.J.apply(jf.J_inv.apply(v)) - v).at(p)), p);
    // J carries frame to frame and its inverse adjoint coframe to coframe.
    for (int mu = 0; mu < n; ++mu) {
      w.feed(max_abs((jf.J.apply(coord.b[static_cast<std::size_t>(mu)]) -
                      act.b[static_cast<std::size_t>(mu)])
                         .at(p)),
             p);
      w.feed(max_abs((jf.J_inv.adjoint_apply(coord.beta[static_cast<std::size_t>(mu)]) -
                      act.beta[static_cast<std::size_t>(mu)])
                         .at(p)),
             p);
    }
    // Transport between the induced relative derivatives.
    VectorField vl = rb.connection.cov_deriv_vector(a, v);
    VectorField vr = jf.J.apply(ra.connection.cov_deriv_vector(a, jf.J_inv.apply(v)));
    w.feed(max_abs((vl - vr).at(p)), p);
  }
}

}  // namespace

const char* to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::ExpectedFail: return "expected_fail";
    case SuiteStatus::Informational: return "informational";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",   "complement", "inversion",   "cartan1",  "cartan2",
      "duality",  "symmetry",   "cyclic",      "bianchi",  "deformation",
      "relative", "split",      "jacobian"};
  return names;
}

int suite_ordinal(const std::string& name) {
  const auto& names = suite_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

double default_tolerance(const std::string& name) {
  if (name == "cartan1" || name == "cartan2") return 1e-9;
  if (name == "cyclic" || name == "bianchi") return 1e-8;
  return 1e-10;
}

Report run_suites(const CompiledConfig& cc, const std::vector<std::string>& names, int samples,
                  std::uint64_t seed, const std::map<std::string, double>& tolerance_overrides) {
  std::set<int> ordinals;
  if (names.empty()) {
    for (const std::string& s : suite_names()) ordinals.insert(suite_ordinal(s));
  } else {
    for (const std::string& s : names) {
      const int o = suite_ordinal(s);
      if (o < 0) throw DomainError("unknown suite '" + s + "'");
      ordinals.insert(o);
    }
  }

  Report report;
  report.config = cc.spec.source;
  report.version = kKernelVersion;
  report.seed = seed;
  report.samples = samples;

  for (int o : ordinals) {
    const std::string& name = suite_names()[static_cast<std::size_t>(o)];
    const auto it = tolerance_overrides.find(name);
    const double tol = it != tolerance_overrides.end() ? it->second : default_tolerance(name);
    const std::uint64_t base = static_cast<std::uint64_t>(o) * kSuiteBlock;

    SuiteResult res;
    res.name = name;
    res.ordinal = o;
    res.tolerance = tol;
    res.samples = samples;

    Worst w;
    const auto dispatch = [&] {
      if (name == "symmetry") {
        SymmetryCheck sc = is_symmetric(cc.G, cc.chart, samples, seed, tol, base);
        w.feed(sc.residual, sc.worst);
        w.feed(sc.theta_residual, sc.worst);
        if (cc.spec.expected_asymmetric) {
          res.status = sc.symmetric ? SuiteStatus::Fail : SuiteStatus::ExpectedFail;
          res.note = sc.symmetric ? "declared asymmetric, but no torsion was detected"
                                  : "asymmetry declared and detected";
        } else {
          res.status = sc.symmetric ? SuiteStatus::Pass : SuiteStatus::Fail;
          if (!sc.symmetric)
            res.note = "torsion detected; declare expected_asymmetric if intended";
        }
        return;
      }
      if (name == "cyclic" || name == "bianchi") {
        // Both identities assume a symmetric structure; probe first.
        SymmetryCheck sc =
            is_symmetric(cc.G, cc.chart, samples, seed, default_tolerance("symmetry"), base);
        if (name == "cyclic")
          run_cyclic(cc, samples, seed, base, w);
        else
          run_bianchi(cc, samples, seed, base, w);
        if (!sc.symmetric) {
          res.status = SuiteStatus::Informational;
          res.note = "identity assumes a symmetric structure; torsion residual " +
                     format_double(sc.residual) + "; residual reported, not judged";
        } else {
          res.status = w.r <= tol ? SuiteStatus::Pass : SuiteStatus::Fail;
        }
        return;
      }
      if (name == "axioms") run_axioms(cc, samples, seed, base, w);
      else if (name == "complement") run_complement(cc, samples, seed, base, w);
      else if (name == "inversion") run_inversion(cc, samples, seed, base, w);
      else if (name == "cartan1") run_cartan1(cc, samples, seed, base, w);
      else if (name == "cartan2") run_cartan2(cc, samples, seed, base, w);
      else if (name == "duality") run_duality(cc, samples, seed, base, w);
      else if (name == "deformation") run_deformation(cc, samples, seed, base, w);
      else if (name == "relative") run_relative(cc, samples, seed, base, w);
      else if (name == "split") run_split(cc, samples, seed, base, w);
      else if (name == "jacobian") run_jacobian(cc, samples, seed, base, w);
      res.status = w.r <= tol ? SuiteStatus::Pass : SuiteStatus::Fail;
    };
    try {
      dispatch();
    } catch (const EvalError& e) {
      // The field layer already attached the expression text and the point.
      throw Error("suite '" + name + "': evaluation error: " + e.what());
    }

    res.max_residual = w.r;
    res.worst = w.p;
    if (res.status == SuiteStatus::Fail) report.pass = false;
    report.suites.push_back(std::move(res));
  }
  return report;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "parallelism verification report\n";
  out << "config:  " << r.config << "\n";
  out << "version: " << r.version << "\n";
  out << "seed:    " << r.seed << "\n";
  out << "samples: " << r.samples << "\n";
  out << "\n";
  for (const SuiteResult& s : r.suites) {
    std::string status = to_string(s.status);
    status.resize(14, ' ');
    std::string name = s.name;
    name.resize(12, ' ');
    out << status << name << "residual " << format_double(s.max_residual) << "  tolerance "
        << format_double(s.tolerance);
    if (!s.worst.x.empty()) {
      out << "  worst at (";
      for (std::size_t i = 0; i < s.worst.x.size(); ++i) {
        if (i) out << ", ";
        out << format_double(s.worst.x[i]);
      }
      out << ")";
    }
    out << "\n";
    if (!s.note.empty()) out << "              note: " << s.note << "\n";
  }
  out << "\nverdict: " << (r.pass ? "pass" : "fail") << "\n";
  return out.str();
}

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["config"] = r.config;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["verdict"] = r.pass ? "pass" : "fail";
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const SuiteResult& s : r.suites) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["status"] = to_string(s.status);
    e["max_residual"] = s.max_residual;
    e["tolerance"] = s.tolerance;
    e["samples"] = s.samples;
    if (!s.worst.x.empty()) e["worst_point"] = s.worst.x;
    if (!s.note.empty()) e["note"] = s.note;
    suites.push_back(std::move(e));
  }
  j["suites"] = std::move(suites);
  return j.dump(2) + "\n";
}

}  // namespace connkit
