#ifndef FOLEX_PFAFF_HPP
#define FOLEX_PFAFF_HPP

#include <stdexcept>
#include <string>

#include "folex/forms.hpp"

namespace folex {

// Raised on invalid projective-section or hypersurface construction.
class SectionError : public std::runtime_error {
 public:
  enum class Code {
    RadialContractionNonzero,
    InhomogeneousCoefficients,
    ZeroForm,
    UnsupportedDegree,
    DimensionMismatch,
  };
  SectionError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Global section of Ω^q(k) on P^n: a q-form on C^{n+1} with homogeneous
// coefficients of degree k−q and zero radial contraction.
struct TwistedSection {
  DiffForm form;
  int n;      // ambient projective dimension (n+1 variables)
  int twist;  // k

  int q() const { return form.form_degree(); }
  int coeff_degree() const { return twist - q(); }
};

// Validates i_R(form) = 0 and homogeneity; twist is k = e + q.
TwistedSection make_section(const DiffForm& form, int n);

// deg(F) = k − q − 1.
int foliation_degree(const TwistedSection& s);

struct SaturationResult {
  TwistedSection saturated;
  Poly removed_divisor;
  int twist_drop;
};

// Divides out the GCD of the coefficients, lowering the twist by its degree.
SaturationResult saturate(const TwistedSection& s);

struct IntegrabilityResult {
  bool integrable;
  DiffForm witness;  // ω∧dω
};

// q = 1 only: ω∧dω = 0.
IntegrabilityResult is_integrable_codim1(const TwistedSection& s);

struct DecomposabilityResult {
  bool decomposable;
  DiffForm witness;  // ω∧ω
};

// q = 2 only: ω∧ω = 0.
DecomposabilityResult is_decomposable_codim2(const TwistedSection& s);

// Contraction-based integrability for q = 2: i_Ξ(ω)∧ω = 0 and
// i_Ξ(ω)∧dω = 0 over the constant coordinate fields Ξ. Standard criterion,
// offered behind a flag.
bool plucker_integrable_codim2(const TwistedSection& s);

struct FoliationVerdict {
  bool is_foliation;
  bool saturated_ok;        // divisorial codim(sing) >= 2 criterion
  bool condition_ok;        // integrability (q=1) / decomposability (q=2)
  bool plucker_checked;     // q=2 optional integrability flag ran
  bool plucker_ok;
  std::string failed_condition;  // empty when verdict is positive
};

// q ∈ {1,2}: saturation removes nothing, plus the integrability (q=1) or
// decomposability (q=2) condition; optionally the q=2 contraction check.
FoliationVerdict is_foliation(const TwistedSection& s, bool check_plucker_q2 = false);

// Section header + form text serialization: "n=<dim> q=<q> k=<twist>".
std::string section_str(const TwistedSection& s);

}  // namespace folex

#endif
