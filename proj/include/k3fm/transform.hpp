#pragma once

#include <string>
#include <utility>

#include "k3fm/errors.hpp"
#include "k3fm/mukai.hpp"
#include "k3fm/surface.hpp"

namespace k3fm {

/// Cohomological degree the transform of a WIT sheaf is concentrated in.
class WitIndex {
 public:
  explicit WitIndex(int i) : value_(i) {
    if (i < 0 || i > 2) throw PreconditionError("WIT index must be 0, 1 or 2");
  }
  int value() const { return value_; }
  /// The transform of a WIT_i sheaf is WIT_{2−i}.
  int transform_index() const { return 2 - value_; }

 private:
  int value_;
};

enum class FmDirection { forward, backward };

/// Fixes the surface and the direction of the push-pull: forward is X → X̂
/// with kernel Q, backward is X̂ → X with kernel Q*. The two surfaces share
/// one lattice under the canonical identification, so direction only selects
/// which (polarization, ℓ-class) pair drives the closed form.
class FmContext {
 public:
  explicit FmContext(ReflexiveSurface surface, FmDirection dir = FmDirection::forward)
      : surface_(std::move(surface)), dir_(dir) {}

  const ReflexiveSurface& surface() const { return surface_; }
  FmDirection direction() const { return dir_; }
  FmContext reversed() const {
    return FmContext(surface_,
                     dir_ == FmDirection::forward ? FmDirection::backward : FmDirection::forward);
  }

  const DivisorClass& source_polarization() const {
    return dir_ == FmDirection::forward ? surface_.H() : surface_.Hhat();
  }
  const DivisorClass& source_ell() const {
    return dir_ == FmDirection::forward ? surface_.ell() : surface_.ellhat();
  }
  const DivisorClass& target_polarization() const {
    return dir_ == FmDirection::forward ? surface_.Hhat() : surface_.H();
  }
  const DivisorClass& target_ell() const {
    return dir_ == FmDirection::forward ? surface_.ellhat() : surface_.ell();
  }

 private:
  ReflexiveSurface surface_;
  FmDirection dir_;
};

/// Closed-form transform of the alternating-sum Mukai vector:
///   ρ̂ = −3ρ + 2σ + ℓ·c₁
///   ĉ₁ = (ℓ·c₁ + 2d)Ĥ + (ρ + d − σ)ℓ̂ − c₁,   d = c₁·H
///   σ̂ = 2ρ − 3σ − ℓ·c₁
/// The backward direction is the same form with (H, ℓ) and (Ĥ, ℓ̂) swapped;
/// it inverts the forward map exactly (guarded by the oracle tests).
inline MukaiVector fm_vector(const FmContext& ctx, const MukaiVector& u) {
  require_same_lattice(u.lattice(), ctx.surface().lattice());
  const BigInt a = intersect(ctx.source_ell(), u.c1);
  const BigInt d = intersect(ctx.source_polarization(), u.c1);
  BigInt rho = BigInt(-3) * u.r + BigInt(2) * u.s + a;
  BigInt sigma = BigInt(2) * u.r + BigInt(-3) * u.s - a;
  DivisorClass c1 =
      (a + BigInt(2) * d) * ctx.target_polarization() + (u.r + d - u.s) * ctx.target_ell() - u.c1;
  return MukaiVector(std::move(rho), std::move(c1), std::move(sigma));
}

/// The unique u with fm_vector(u) = w: the closed form of the opposite kernel.
inline MukaiVector inverse_fm_vector(const FmContext& ctx, const MukaiVector& w) {
  return fm_vector(ctx.reversed(), w);
}

/// Sheaf-level vector of a declared WIT_i input: v(F̂) = (−1)^i · û.
struct WitAdjusted {
  MukaiVector sheaf_vector;
  int input_index;
  int transform_index;
};

inline WitAdjusted wit_sheaf_vector(const MukaiVector& u_hat, WitIndex i) {
  MukaiVector v = (i.value() % 2 == 0) ? u_hat : -u_hat;
  return WitAdjusted{std::move(v), i.value(), i.transform_index()};
}

/// Degree with respect to a polarization.
inline BigInt degree(const MukaiVector& u, const DivisorClass& polarization) {
  return intersect(u.c1, polarization);
}

/// Transform of u together with the euler-characteristic bookkeeping.
struct TransformResult {
  MukaiVector u_hat;
  MukaiVector wit_vector(WitIndex i) const { return wit_sheaf_vector(u_hat, i).sheaf_vector; }
};

inline TransformResult fm_transform(const FmContext& ctx, const MukaiVector& u) {
  return TransformResult{fm_vector(ctx, u)};
}

/// χ and degree on both sides, plus the WIT₁-adjusted identities
/// χ(F̂) = χ(F) and deg_Ĥ(F̂) = deg_H(F).
struct PreservationReport {
  BigInt chi_in, chi_out;
  BigInt deg_in, deg_out;
  BigInt chi_wit1, deg_wit1;
  bool chi_preserved = false;
  bool deg_preserved = false;
};

inline PreservationReport preservation_report(const FmContext& ctx, const MukaiVector& u) {
  MukaiVector u_hat = fm_vector(ctx, u);
  PreservationReport rep;
  rep.chi_in = euler_char(u);
  rep.chi_out = euler_char(u_hat);
  rep.deg_in = degree(u, ctx.source_polarization());
  rep.deg_out = degree(u_hat, ctx.target_polarization());
  rep.chi_wit1 = -rep.chi_out;
  rep.deg_wit1 = -rep.deg_out;
  rep.chi_preserved = rep.chi_wit1 == rep.chi_in;
  rep.deg_preserved = rep.deg_wit1 == rep.deg_in;
  return rep;
}

/// The checkable hypotheses under which a μ-stable bundle is IT₁: degree
/// zero and dual vector different from the canonical (2, ℓ, −3). Stability
/// itself is not lattice-decidable and stays an input assertion.
struct It1Report {
  bool degree_zero = false;
  bool dual_differs = false;
  bool hypotheses_hold = false;
  std::string assumed = "mu-stability of the input is assumed, not checked";
};

inline It1Report it1_hypotheses(const FmContext& ctx, const MukaiVector& u) {
  It1Report rep;
  rep.degree_zero = degree(u, ctx.source_polarization()).is_zero();
  MukaiVector canonical = ctx.direction() == FmDirection::forward
                              ? ctx.surface().canonical_vector()
                              : ctx.surface().canonical_vector_dual();
  rep.dual_differs = dual_vector(u) != canonical;
  rep.hypotheses_hold = rep.degree_zero && rep.dual_differs;
  return rep;
}

}  // namespace k3fm
