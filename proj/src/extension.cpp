#include "folex/extension.hpp"

namespace folex {

bool theorem_a_hypothesis(const Hypersurface& x, int l) { return x.degree > 2 * l + 1; }

bool transversality_guaranteed(const Hypersurface& x, int l) { return l + 2 <= x.degree; }

const char* kind_str(ExtensionOutcome::Kind k) {
  switch (k) {
    case ExtensionOutcome::Kind::UniqueIntegrable:
      return "UniqueIntegrable";
    case ExtensionOutcome::Kind::UniqueNonIntegrable:
      return "UniqueNonIntegrable";
    case ExtensionOutcome::Kind::KernelCoset:
      return "KernelCoset";
  }
  return "?";
}

namespace {

ExtensionHypotheses fill_hypotheses(const Hypersurface& x, const TwistedSection& s) {
  ExtensionHypotheses h;
  const int l = foliation_degree(s);
  h.theorem_a = theorem_a_hypothesis(x, l);
  h.transversality = transversality_guaranteed(x, l);
  h.lemma_injectivity = s.twist - s.q() + 1 <= x.degree;
  if (x.n == 3) h.n3_remark = (s.q() == 1 ? s.twist <= x.degree : s.twist - 1 <= x.degree);
  return h;
}

std::vector<std::string> standard_assumptions(const Hypersurface& x) {
  std::vector<std::string> a;
  a.push_back(x.smooth() ? "smoothness: certified or asserted" : "smoothness: heuristic only");
  a.push_back("input represents the induced object on X via an ambient form (surjective restriction assumed)");
  return a;
}

}  // namespace

ExtensionOutcome extend_codim1(const Hypersurface& x, const TwistedSection& beta) {
  if (beta.q() != 1)
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "extend_codim1 needs q = 1");
  if (beta.form.is_zero())
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "beta must be nonzero");
  if (beta.form.n_vars() != x.n + 1)
    throw ExtensionError(ExtensionError::Code::DimensionMismatch, "ambient dimension mismatch");

  DiffForm w = wedge(beta.form, exterior_derivative(beta.form));
  RestrictionVanishResult rv = restriction_vanishes(x, w, 2 * beta.twist);
  if (!rv.vanishes)
    throw ExtensionError(ExtensionError::Code::RestrictedFormNotIntegrable,
                         "the restriction of beta does not define a foliation on X");

  ExtensionOutcome out{ExtensionOutcome::Kind::KernelCoset,
                       beta,
                       restriction_kernel(x, 1, beta.twist),
                       w,
                       std::nullopt,
                       fill_hypotheses(x, beta),
                       standard_assumptions(x),
                       w.is_zero()};
  if (out.kernel.dim() == 0) {
    if (w.is_zero()) {
      out.kind = ExtensionOutcome::Kind::UniqueIntegrable;
    } else {
      out.kind = ExtensionOutcome::Kind::UniqueNonIntegrable;
      out.certificate = NonExtensionCertificate{beta, 0, w, 2 * beta.twist, rv.vanishes};
    }
  }
  return out;
}

ExtensionOutcome extend_distribution_codim2(const Hypersurface& x, const TwistedSection& beta) {
  if (beta.q() != 2)
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "extend_distribution_codim2 needs q = 2");
  if (x.n < 4)
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "needs ambient dimension n >= 4");
  if (beta.form.is_zero())
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "beta must be nonzero");
  if (beta.form.n_vars() != x.n + 1)
    throw ExtensionError(ExtensionError::Code::DimensionMismatch, "ambient dimension mismatch");

  DiffForm w = wedge(beta.form, beta.form);
  RestrictionVanishResult rv = restriction_vanishes(x, w, 2 * beta.twist);
  if (!rv.vanishes)
    throw ExtensionError(ExtensionError::Code::RestrictedFormNotDecomposable,
                         "the restriction of beta does not define a distribution on X");

  ExtensionOutcome out{ExtensionOutcome::Kind::KernelCoset,
                       beta,
                       restriction_kernel(x, 2, beta.twist),
                       w,
                       std::nullopt,
                       fill_hypotheses(x, beta),
                       standard_assumptions(x),
                       w.is_zero()};
  // The positive regime needs n > 4 and 2k-3 <= d; n = 4 is the
  // non-extension regime for non-decomposable ambient representatives.
  out.hypotheses.theorem_a = (x.n > 4) && (2 * beta.twist - 3 <= x.degree);
  if (out.kernel.dim() == 0) {
    if (w.is_zero()) {
      out.kind = ExtensionOutcome::Kind::UniqueIntegrable;
    } else {
      out.kind = ExtensionOutcome::Kind::UniqueNonIntegrable;
      out.certificate = NonExtensionCertificate{beta, 0, w, 2 * beta.twist, rv.vanishes};
    }
  }
  return out;
}

namespace {

Poly extend_vars(const Poly& p) {
  Poly r(p.n_vars() + 1);
  for (const auto& [m, c] : p.terms()) {
    Mono e = m;
    e.push_back(0);
    r.add_term(e, c);
  }
  return r;
}

}  // namespace

TwistedSection trivial_extension(const TwistedSection& omega, int n) {
  if (omega.n != n - 1)
    throw ExtensionError(ExtensionError::Code::DimensionMismatch,
                         "trivial_extension expects a section on P^{n-1}");
  DiffForm f(omega.form.n_vars() + 1, omega.q());
  for (const auto& [m, p] : omega.form.components()) f.add_component(m, extend_vars(p));
  return make_section(f, n);
}

DiffForm restrict_to_last_hyperplane(const DiffForm& form) {
  const int nv = form.n_vars();
  DiffForm r(nv - 1, form.form_degree());
  const IndexMask last = IndexMask(1) << (nv - 1);
  for (const auto& [m, p] : form.components()) {
    if (m & last) continue;  // dx_last pulls back to zero
    Poly q(nv - 1);
    for (const auto& [mono, c] : p.terms()) {
      if (mono[nv - 1] != 0) continue;  // x_last = 0
      Mono e(mono.begin(), mono.end() - 1);
      q.add_term(e, c);
    }
    r.add_component(m, q);
  }
  return r;
}

RoundTripReport theorem_c_roundtrip(const Hypersurface& x, const TwistedSection& alpha) {
  if (alpha.q() != 1)
    throw ExtensionError(ExtensionError::Code::UnsupportedDegree, "theorem_c_roundtrip needs q = 1");
  RoundTripReport r{};
  const int l = foliation_degree(alpha);
  r.hypotheses = fill_hypotheses(x, alpha);
  r.transversality = transversality_guaranteed(x, l);
  r.hypotheses_ok = theorem_a_hypothesis(x, l) && x.n > 3;
  if (!r.hypotheses_ok) return r;
  ExtensionOutcome out = extend_codim1(x, alpha);
  r.kernel_dim = out.kernel.dim();
  r.recovered_exactly =
      out.kind == ExtensionOutcome::Kind::UniqueIntegrable && out.candidate.form == alpha.form;
  r.outcome = std::move(out);
  return r;
}

}  // namespace folex
