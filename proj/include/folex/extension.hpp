#ifndef FOLEX_EXTENSION_HPP
#define FOLEX_EXTENSION_HPP

#include <string>
#include <vector>

#include "folex/restriction.hpp"

namespace folex {

class ExtensionError : public std::runtime_error {
 public:
  enum class Code {
    RestrictedFormNotIntegrable,
    RestrictedFormNotDecomposable,
    DimensionMismatch,
    UnsupportedDegree,
  };
  ExtensionError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// d > 2l + 1: the degree gap that forces extensions of degree-l foliations.
bool theorem_a_hypothesis(const Hypersurface& x, int l);

// l + 2 <= d: restrictions of degree-l foliations stay saturated on X.
bool transversality_guaranteed(const Hypersurface& x, int l);

struct NonExtensionCertificate {
  TwistedSection section;     // the ambient representative β
  int kernel_dim;             // 0 in every emitted certificate
  DiffForm witness;           // β∧dβ (q=1) or β∧β (q=2), nonzero ambiently
  int witness_twist;
  bool witness_restricts_to_zero;

  bool valid() const { return kernel_dim == 0 && !witness.is_zero() && witness_restricts_to_zero; }
};

struct ExtensionHypotheses {
  bool theorem_a = false;       // d > 2l+1
  bool transversality = false;  // l+2 <= d
  bool n3_remark = false;       // n=3 criterion k <= d (q=1) / k-1 <= d (q=2)
  bool lemma_injectivity = false;  // k-q+1 <= d
};

struct ExtensionOutcome {
  enum class Kind { UniqueIntegrable, UniqueNonIntegrable, KernelCoset };
  Kind kind;
  TwistedSection candidate;
  RestrictionKernel kernel;
  DiffForm witness;  // ω∧dω or ω∧ω; zero in the integrable/decomposable case
  std::optional<NonExtensionCertificate> certificate;
  ExtensionHypotheses hypotheses;
  std::vector<std::string> assumptions;
  bool candidate_condition_holds;  // β∧dβ = 0 resp. β∧β = 0
};

const char* kind_str(ExtensionOutcome::Kind k);

// Lift-then-verify extension of a codimension one foliation communicated by
// its ambient representative β. Requires the restricted integrability
// restriction_vanishes(x, β∧dβ).
ExtensionOutcome extend_codim1(const Hypersurface& x, const TwistedSection& beta);

// Codimension two analogue on P^n, n >= 4; requires restricted
// decomposability restriction_vanishes(x, β∧β).
ExtensionOutcome extend_distribution_codim2(const Hypersurface& x, const TwistedSection& beta);

// Pullback along the projection from [0:...:0:1]: the same form read in one
// more variable.
TwistedSection trivial_extension(const TwistedSection& omega, int n);

// Pullback to the hyperplane {x_last = 0}: drops dx_last components and sets
// the last variable to zero. Inverse of trivial_extension on its image.
DiffForm restrict_to_last_hyperplane(const DiffForm& form);

struct RoundTripReport {
  bool hypotheses_ok;       // d > 2l+1 and n > 3
  bool transversality;      // l+2 <= d
  ExtensionHypotheses hypotheses;
  int kernel_dim = -1;
  bool recovered_exactly = false;  // unique extension equals the input term-by-term
  std::optional<ExtensionOutcome> outcome;
};

// Theorem-C style round trip: restrict-then-extend recovers the section.
RoundTripReport theorem_c_roundtrip(const Hypersurface& x, const TwistedSection& alpha);

}  // namespace folex

#endif
