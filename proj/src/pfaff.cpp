#include "folex/pfaff.hpp"

#include <sstream>

namespace folex {

TwistedSection make_section(const DiffForm& form, int n) {
  if (form.n_vars() != n + 1)
    throw SectionError(SectionError::Code::DimensionMismatch, "form must live on C^{n+1}");
  if (form.is_zero()) throw SectionError(SectionError::Code::ZeroForm, "zero form is not a section");
  if (!form.coeffs_homogeneous())
    throw SectionError(SectionError::Code::InhomogeneousCoefficients,
                       "coefficients must be homogeneous of one degree");
  DiffForm contracted = interior_product(VectorField::radial(n + 1), form);
  if (!contracted.is_zero())
    throw SectionError(SectionError::Code::RadialContractionNonzero, "i_R(form) != 0");
  return TwistedSection{form, n, form.coeff_degree() + form.form_degree()};
}

int foliation_degree(const TwistedSection& s) { return s.twist - s.q() - 1; }

SaturationResult saturate(const TwistedSection& s) {
  Poly g = gcd_many(s.form.coefficient_list());
  DiffForm reduced(s.form.n_vars(), s.q());
  for (const auto& [m, p] : s.form.components()) reduced.add_component(m, *exact_divide(p, g));
  const int drop = std::max(g.total_degree(), 0);
  return SaturationResult{TwistedSection{reduced, s.n, s.twist - drop}, g, drop};
}

IntegrabilityResult is_integrable_codim1(const TwistedSection& s) {
  if (s.q() != 1) throw SectionError(SectionError::Code::UnsupportedDegree, "q must be 1");
  DiffForm w = wedge(s.form, exterior_derivative(s.form));
  return IntegrabilityResult{w.is_zero(), w};
}

DecomposabilityResult is_decomposable_codim2(const TwistedSection& s) {
  if (s.q() != 2) throw SectionError(SectionError::Code::UnsupportedDegree, "q must be 2");
  DiffForm w = wedge(s.form, s.form);
  return DecomposabilityResult{w.is_zero(), w};
}

bool plucker_integrable_codim2(const TwistedSection& s) {
  if (s.q() != 2) throw SectionError(SectionError::Code::UnsupportedDegree, "q must be 2");
  DiffForm dw = exterior_derivative(s.form);
  for (int i = 0; i < s.form.n_vars(); ++i) {
    DiffForm contracted = interior_product(VectorField::coordinate(s.form.n_vars(), i), s.form);
    if (!wedge(contracted, s.form).is_zero()) return false;
    if (!wedge(contracted, dw).is_zero()) return false;
  }
  return true;
}

FoliationVerdict is_foliation(const TwistedSection& s, bool check_plucker_q2) {
  if (s.q() != 1 && s.q() != 2)
    throw SectionError(SectionError::Code::UnsupportedDegree, "q must be 1 or 2");
  FoliationVerdict v{};
  SaturationResult sat = saturate(s);
  v.saturated_ok = sat.twist_drop == 0;
  if (s.q() == 1) {
    v.condition_ok = is_integrable_codim1(s).integrable;
    if (!v.condition_ok) v.failed_condition = "integrability";
  } else {
    v.condition_ok = is_decomposable_codim2(s).decomposable;
    if (!v.condition_ok) v.failed_condition = "decomposability";
    if (check_plucker_q2) {
      v.plucker_checked = true;
      v.plucker_ok = plucker_integrable_codim2(s);
      if (v.condition_ok && !v.plucker_ok) v.failed_condition = "contraction integrability";
    }
  }
  if (!v.saturated_ok && v.failed_condition.empty()) v.failed_condition = "saturation";
  v.is_foliation = v.saturated_ok && v.condition_ok && (!v.plucker_checked || v.plucker_ok);
  return v;
}

std::string section_str(const TwistedSection& s) {
  std::ostringstream out;
  out << "n=" << s.n << " q=" << s.q() << " k=" << s.twist << "\n" << s.form.str();
  return out.str();
}

}  // namespace folex
