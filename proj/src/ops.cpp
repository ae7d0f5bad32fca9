#include "folex/ops.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "folex/parse.hpp"

namespace folex::ops {

Hypersurface hypersurface_from_spec(const std::string& spec, int n) {
  if (spec.rfind("fermat:", 0) == 0) {
    std::istringstream in(spec.substr(7));
    int fn = 0, fd = 0;
    char colon = 0;
    if (!(in >> fn >> colon >> fd) || colon != ':')
      throw std::invalid_argument("expected fermat:<n>:<d>");
    return fermat_hypersurface(fn, fd);
  }
  if (spec.rfind("quadric:", 0) == 0) {
    int qn = std::stoi(spec.substr(8));
    return fermat_hypersurface(qn, 2);
  }
  Poly f = parse_poly(spec, n >= 0 ? n + 1 : -1);
  return make_hypersurface(f);
}

RatVector parse_point(const std::string& text) {
  RatVector out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t slash = item.find('/');
    Rat r;
    if (slash == std::string::npos) {
      r = Rat(std::stol(item));
    } else {
      r = Rat(std::stol(item.substr(0, slash)), std::stol(item.substr(slash + 1)));
      r.canonicalize();
    }
    out.push_back(r);
  }
  return out;
}

namespace {

json base_report(const std::string& op) { return json{{"schema", 1}, {"op", op}}; }

json hypotheses_json(const ExtensionHypotheses& h) {
  return json{{"theorem_a", h.theorem_a},
              {"transversality", h.transversality},
              {"n3_remark", h.n3_remark},
              {"lemma_injectivity", h.lemma_injectivity}};
}

TwistedSection section_from(const json& p, const char* key, int n) {
  DiffForm f = parse_form_homogeneous(p.at(key).get<std::string>(), n + 1);
  return make_section(f, n);
}

json extension_report(const std::string& op, const ExtensionOutcome& out) {
  json r = base_report(op);
  r["verdict"] = kind_str(out.kind);
  r["kernel_dim"] = out.kernel.dim();
  r["ambient_dim"] = out.kernel.ambient_dim;
  r["witness"] = out.witness.str();
  r["candidate"] = out.candidate.form.str();
  r["n"] = out.kernel.n;
  r["q"] = out.kernel.q;
  r["k"] = out.kernel.k;
  r["d"] = out.kernel.d;
  r["hypotheses"] = hypotheses_json(out.hypotheses);
  r["assumptions"] = out.assumptions;
  if (out.certificate) {
    r["certificate"] = json{{"kernel_dim", out.certificate->kernel_dim},
                            {"witness", out.certificate->witness.str()},
                            {"witness_twist", out.certificate->witness_twist},
                            {"witness_restricts_to_zero", out.certificate->witness_restricts_to_zero},
                            {"valid", out.certificate->valid()}};
  }
  return r;
}

const char* smoothness_str(Smoothness s) {
  switch (s) {
    case Smoothness::CertifiedSmooth:
      return "certified";
    case Smoothness::HeuristicallySmooth:
      return "heuristic";
    case Smoothness::SingularPointFound:
      return "singular-point-found";
    case Smoothness::Unknown:
      return "unknown";
  }
  return "?";
}

}  // namespace

json run_op(const std::string& op, const json& p) {
  if (op == "dims") {
    const int n = p.at("n"), q = p.at("q"), k = p.at("k");
    json r = base_report(op);
    r["n"] = n;
    r["q"] = q;
    r["k"] = k;
    r["bott"] = h0_bott(n, q, k);
    r["direct"] = h0_direct(n, q, k);
    r["agree"] = r["bott"] == r["direct"];
    return r;
  }
  if (op == "kernel") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    RestrictionKernel ker = restriction_kernel(x, p.at("q"), p.at("k"));
    json r = base_report(op);
    r["n"] = ker.n;
    r["d"] = ker.d;
    r["q"] = ker.q;
    r["k"] = ker.k;
    r["kernel_dim"] = ker.dim();
    r["ambient_dim"] = ker.ambient_dim;
    r["injective"] = ker.injective();
    json basis = json::array();
    for (const TwistedSection& s : ker.basis) basis.push_back(s.form.str());
    r["basis"] = basis;
    return r;
  }
  if (op == "invariant") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    TwistedSection s = section_from(p, "form", x.n);
    json r = base_report(op);
    r["invariant"] = is_invariant(x, s);
    r["invariant_linear"] = is_invariant_linear(x, s);
    r["agree"] = r["invariant"] == r["invariant_linear"];
    return r;
  }
  if (op == "restrict-zero") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    DiffForm f = parse_form_homogeneous(p.at("form"), x.n + 1);
    const int twist = p.contains("twist") ? p.at("twist").get<int>()
                                          : f.coeff_degree() + f.form_degree();
    RestrictionVanishResult rv = restriction_vanishes(x, f, twist);
    json r = base_report(op);
    r["vanishes"] = rv.vanishes;
    r["trivially_top_degree"] = rv.trivially_top_degree;
    if (rv.beta) r["beta"] = rv.beta->str();
    if (rv.gamma) r["gamma"] = rv.gamma->str();
    return r;
  }
  if (op == "saturate") {
    const int n = p.at("n");
    TwistedSection s = section_from(p, "form", n);
    SaturationResult sat = saturate(s);
    json r = base_report(op);
    r["removed_divisor"] = sat.removed_divisor.str();
    r["twist_before"] = s.twist;
    r["twist_after"] = sat.saturated.twist;
    r["twist_drop"] = sat.twist_drop;
    r["saturated_form"] = sat.saturated.form.str();
    return r;
  }
  if (op == "integrable") {
    const int n = p.at("n");
    TwistedSection s = section_from(p, "form", n);
    IntegrabilityResult res = is_integrable_codim1(s);
    json r = base_report(op);
    r["integrable"] = res.integrable;
    r["witness"] = res.witness.str();
    return r;
  }
  if (op == "decomposable") {
    const int n = p.at("n");
    TwistedSection s = section_from(p, "form", n);
    DecomposabilityResult res = is_decomposable_codim2(s);
    json r = base_report(op);
    r["decomposable"] = res.decomposable;
    r["witness"] = res.witness.str();
    return r;
  }
  if (op == "extend") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    std::string beta = p.at("beta");
    if (beta == "contact" && x.n == 3) beta = "x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2";
    TwistedSection s = make_section(parse_form_homogeneous(beta, x.n + 1), x.n);
    json r = extension_report(op, extend_codim1(x, s));
    r["smoothness"] = smoothness_str(x.smoothness);
    return r;
  }
  if (op == "extend-dist") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    TwistedSection s = section_from(p, "beta", x.n);
    ExtensionOutcome out = extend_distribution_codim2(x, s);
    json r = extension_report(op, out);
    r["n4_nonextension_regime"] = (x.n == 4);
    return r;
  }
  if (op == "certify-nonextension") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    std::string beta = p.at("beta");
    if (beta == "contact" && x.n == 3) beta = "x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2";
    TwistedSection s = make_section(parse_form_homogeneous(beta, x.n + 1), x.n);
    ExtensionOutcome out = s.q() == 1 ? extend_codim1(x, s) : extend_distribution_codim2(x, s);
    json r = extension_report(op, out);
    r["certified"] = out.certificate.has_value() && out.certificate->valid();
    return r;
  }
  if (op == "trivial-extend") {
    const int n = p.at("n");
    DiffForm f = parse_form_homogeneous(p.at("form"), n);  // form on P^{n-1}
    TwistedSection src = make_section(f, n - 1);
    TwistedSection ext = trivial_extension(src, n);
    json r = base_report(op);
    r["section"] = section_str(ext);
    r["form"] = ext.form.str();
    r["twist"] = ext.twist;
    return r;
  }
  if (op == "roundtrip") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    TwistedSection s = section_from(p, "alpha", x.n);
    RoundTripReport rep = theorem_c_roundtrip(x, s);
    json r = base_report(op);
    r["hypotheses_ok"] = rep.hypotheses_ok;
    r["transversality"] = rep.transversality;
    r["kernel_dim"] = rep.kernel_dim;
    r["recovered_exactly"] = rep.recovered_exactly;
    r["hypotheses"] = hypotheses_json(rep.hypotheses);
    return r;
  }
  if (op == "poincare") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    TwistedSection s = section_from(p, "form", x.n);
    PoincareVerdict v = poincare_bound_check(x, s);
    json r = base_report(op);
    r["invariant"] = v.invariant;
    r["consistent"] = v.consistent;
    r["d"] = x.degree;
    r["q"] = s.q();
    r["k"] = s.twist;
    return r;
  }
  if (op == "gauss") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    std::vector<Int> g = gauss_map_value(x, parse_point(p.at("point")));
    json r = base_report(op);
    json arr = json::array();
    for (const Int& v : g) arr.push_back(v.get_str());
    r["gauss"] = arr;
    return r;
  }
  if (op == "sff-rank") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    json r = base_report(op);
    r["rank"] = second_fundamental_rank(x, parse_point(p.at("point")));
    return r;
  }
  if (op == "morse") {
    Hypersurface x = hypersurface_from_spec(p.at("f"), p.value("n", -1));
    const int chart = p.at("chart");
    ProbePoint pp = make_probe_point(x, chart, parse_point(p.at("point")));
    Poly g = parse_poly(p.at("g"), x.n);
    MorseReport rep = morse_classify(x, g, pp);
    json r = base_report(op);
    r["critical"] = rep.critical;
    r["verdict"] = verdict_str(rep.verdict);
    if (rep.critical) {
      r["multiplier"] = to_string(rep.multiplier);
      r["det"] = to_string(rep.determinant);
      json h = json::array();
      for (const RatVector& row : rep.restricted_hessian) {
        json jr = json::array();
        for (const Rat& v : row) jr.push_back(to_string(v));
        h.push_back(jr);
      }
      r["hessian"] = h;
    }
    if (p.contains("lambda_pivot")) {
      LambdaFamily fam = lambda_family(x, g, pp, p.at("lambda_pivot"));
      json coeffs = json::array();
      for (const Rat& c : fam.det_coeffs) coeffs.push_back(to_string(c));
      r["lambda_poly"] = coeffs;
      r["lambda_degree"] = fam.degree;
      json bad = json::array();
      for (const Rat& c : fam.bad_lambdas) bad.push_back(to_string(c));
      r["bad_lambdas"] = bad;
    }
    return r;
  }
  throw std::invalid_argument("unknown operation: " + op);
}

bool json_subset(const json& expected, const json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key())) return false;
      if (!json_subset(it.value(), actual.at(it.key()))) return false;
    }
    return true;
  }
  return expected == actual;
}

}  // namespace folex::ops
