#ifndef FOLEX_RESTRICTION_HPP
#define FOLEX_RESTRICTION_HPP

#include <optional>

#include "folex/pfaff.hpp"

namespace folex {

enum class Smoothness {
  CertifiedSmooth,      // pattern rule applies (diagonal/Fermat-type, hyperplane)
  HeuristicallySmooth,  // gradient nonzero at every sampled rational point of f=0
  SingularPointFound,   // a sampled point annihilates the gradient
  Unknown,              // no rational sample point found
};

struct Hypersurface {
  Poly f;
  int n;       // ambient projective dimension
  int degree;  // d = deg f
  std::vector<Poly> gradient;
  Smoothness smoothness;
  std::optional<RatVector> singular_sample;  // set when SingularPointFound
  bool smooth_asserted = false;
  bool irreducible_asserted = false;

  bool smooth() const {
    return smooth_asserted || smoothness == Smoothness::CertifiedSmooth;
  }
};

Hypersurface make_hypersurface(const Poly& f, bool smooth_asserted = false,
                               bool irreducible_asserted = false);

// Shorthand families used throughout: Σ x_i^d in P^n and Σ x_i^2.
Hypersurface fermat_hypersurface(int n, int d);

// True iff df∧ω ≡ 0 mod f (every coefficient exactly divisible by f).
bool is_invariant(const Hypersurface& x, const TwistedSection& s);

// Independent route to the same predicate: df∧ω lies in the column span of
// f·(monomial (q+1)-forms), solved by exact linear algebra.
bool is_invariant_linear(const Hypersurface& x, const TwistedSection& s);

struct RestrictionVanishResult {
  bool vanishes;
  // Witness pair with ω = f·β + df∧γ, when established by membership.
  std::optional<DiffForm> beta, gamma;
  // True when the verdict is structural: Ω^q_X = 0 because q > dim X.
  bool trivially_top_degree = false;
};

// True iff the restriction of ω to X vanishes: membership
// ω ∈ f·V(n,q,k−q−d) + df∧V(n,q−1,k−q−d+1) for q ≤ dim X, and structural
// vanishing for q > dim X = n−1.
RestrictionVanishResult restriction_vanishes(const Hypersurface& x, const TwistedSection& s);
RestrictionVanishResult restriction_vanishes(const Hypersurface& x, const DiffForm& form, int twist);

struct RestrictionKernel {
  int n, q, k, d;
  std::vector<TwistedSection> basis;  // canonical basis of ker rest_q at (q,k)
  long ambient_dim;                   // dim H⁰(Pⁿ,Ω^q(k))

  int dim() const { return static_cast<int>(basis.size()); }
  bool injective() const { return basis.empty(); }
};

RestrictionKernel restriction_kernel(const Hypersurface& x, int q, int k);

// Closed-form dimension of H⁰(Pⁿ,Ω^q(k)).
long h0_bott(int n, int q, int k);

// Independent oracle: kernel dimension of i_R : V(n,q,k−q) → V(n,q−1,k−q+1),
// computed by exact nullspace blockwise over monomial multidegrees.
long h0_direct(int n, int q, int k);

// Canonical coordinate basis of H⁰(Pⁿ,Ω^q(k)) inside V(n,q,k−q).
std::vector<RatVector> h0_basis(int n, int q, int k);

struct PoincareVerdict {
  bool invariant;
  bool consistent;  // d ≤ k−q whenever invariant
};

PoincareVerdict poincare_bound_check(const Hypersurface& x, const TwistedSection& s);

}  // namespace folex

#endif
