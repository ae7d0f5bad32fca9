#ifndef FOLEX_MORSE_HPP
#define FOLEX_MORSE_HPP

#include <string>
#include <vector>

#include "folex/restriction.hpp"

namespace folex {

class MorseError : public std::runtime_error {
 public:
  enum class Code { SingularPoint, ChartMismatch, ZeroLinearPart, TangentFrameNotAdapted, NotOnHypersurface };
  MorseError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Rational affine point on X in a fixed chart, regular for the gradient.
struct ProbePoint {
  int chart;        // homogeneous coordinate set to 1
  RatVector coords; // affine coordinates, length n
};

// Validates f̂(p) = 0 and ∇f̂(p) ≠ 0 in the chart.
ProbePoint make_probe_point(const Hypersurface& x, int chart, RatVector coords);

// Gradient of f as a projective point, normalized to a primitive integer
// vector with positive first nonzero entry.
std::vector<Int> gauss_map_value(const Hypersurface& x, const RatVector& projective_point);

// Rank of Hess f(p) restricted to ker df(p) modulo the radial direction.
int second_fundamental_rank(const Hypersurface& x, const RatVector& projective_point);

struct MorseReport {
  enum class Verdict { Morse, Degenerate, NotCritical };
  Verdict verdict;
  bool critical;
  Rat multiplier;  // c with ∇ĝ(p) = c·∇f̂(p), meaningful when critical
  std::vector<RatVector> restricted_hessian;  // (n-1)×(n-1) on ker ∇f̂(p)
  Rat determinant;
};

const char* verdict_str(MorseReport::Verdict v);

// Classifies p as a singularity of the restriction of the first integral g
// (an affine polynomial in p's chart) to X, via the constrained Hessian.
MorseReport morse_classify(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p);

struct LambdaFamily {
  std::vector<Rat> det_coeffs;  // determinant polynomial in λ, index = power
  std::vector<Rat> bad_lambdas; // rational roots
  int degree;                   // ≤ n-1

  Rat evaluate(const Rat& lambda) const;
};

// Builds ĝ_λ = ĝ ∘ h_λ for the pivot-k automorphism family and returns the
// restricted-Hessian determinant as a polynomial in λ. Requires the chart
// frame to be adapted: ∇f̂(p) proportional to the last coordinate direction.
LambdaFamily lambda_family(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p, int pivot);

// The transformed first integral ĝ ∘ h_λ0 at a concrete rational λ0, in the
// original chart coordinates; feeds the independent morse_classify path.
Poly lambda_instance(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p, int pivot,
                     const Rat& lambda0);

}  // namespace folex

#endif
