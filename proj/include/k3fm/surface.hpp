#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fm/errors.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/mukai.hpp"

namespace k3fm {

/// Raw surface description: a lattice with designated classes H and ℓ.
/// Nothing is validated here; run check_reflexive or ReflexiveSurface::create.
struct SurfaceData {
  LatticePtr lattice;
  DivisorClass H;
  DivisorClass ell;
};

struct ReflexivityReport {
  bool reflexive = false;
  std::vector<std::string> failures;
};

/// Decides H² = 2, H·ℓ = 0, ℓ² = −12 and primitivity of H, with one
/// diagnostic per failed relation. Rank-1 lattices are rejected outright:
/// they cannot carry an ℓ orthogonal to H with ℓ² = −12.
inline ReflexivityReport check_reflexive(const SurfaceData& s) {
  ReflexivityReport rep;
  if (s.H.lattice().get() != s.lattice.get() || s.ell.lattice().get() != s.lattice.get())
    throw LatticeMismatchError("H and ell must live in the surface lattice");
  if (s.lattice->rank() < 2) {
    rep.failures.push_back("lattice rank is 1: no room for an orthogonal class ell");
    return rep;
  }
  BigInt h2 = self_intersection(s.H);
  BigInt hl = intersect(s.H, s.ell);
  BigInt l2 = self_intersection(s.ell);
  if (h2 != BigInt(2)) rep.failures.push_back("H.H = " + h2.to_string() + ", expected 2");
  if (!hl.is_zero()) rep.failures.push_back("H.ell = " + hl.to_string() + ", expected 0");
  if (l2 != BigInt(-12)) rep.failures.push_back("ell.ell = " + l2.to_string() + ", expected -12");
  BigInt g;
  for (const auto& c : s.H.coords()) g = BigInt::gcd(g, c);
  if (g != BigInt(1)) rep.failures.push_back("H is not primitive (coordinate gcd " + g.to_string() + ")");
  rep.reflexive = rep.failures.empty();
  return rep;
}

/// A K3 surface carrying H, ℓ with H²=2, H·ℓ=0, ℓ²=−12, together with the
/// dual pair Ĥ = 2ℓ+5H, ℓ̂ = −5ℓ−12H expressed in the same basis (X and
/// the moduli surface share one lattice under the canonical identification).
class ReflexiveSurface {
 public:
  static ReflexiveSurface create(SurfaceData data) {
    auto rep = check_reflexive(data);
    if (!rep.reflexive) {
      std::string msg = "surface is not reflexive:";
      for (const auto& f : rep.failures) msg += " " + f + ";";
      throw NotReflexiveError(msg);
    }
    DivisorClass hhat = BigInt(2) * data.ell + BigInt(5) * data.H;
    DivisorClass ellhat = BigInt(-5) * data.ell + BigInt(-12) * data.H;
    // the dual pair satisfies the same relations; failure here is a bug
    if (self_intersection(hhat) != BigInt(2) || !intersect(hhat, ellhat).is_zero() ||
        self_intersection(ellhat) != BigInt(-12))
      throw InternalError("derived dual classes violate the reflexive relations");
    return ReflexiveSurface(std::move(data), std::move(hhat), std::move(ellhat));
  }

  const LatticePtr& lattice() const { return data_.lattice; }
  const DivisorClass& H() const { return data_.H; }
  const DivisorClass& ell() const { return data_.ell; }
  const DivisorClass& Hhat() const { return hhat_; }
  const DivisorClass& ellhat() const { return ellhat_; }
  const SurfaceData& data() const { return data_; }

  /// v = (2, ℓ, −3), the isotropic vector the moduli surface is built on.
  MukaiVector canonical_vector() const { return MukaiVector(2, data_.ell, -3); }

  /// v̂ = (2, ℓ̂, −3), its counterpart on the dual side.
  MukaiVector canonical_vector_dual() const { return MukaiVector(2, ellhat_, -3); }

 private:
  ReflexiveSurface(SurfaceData data, DivisorClass hhat, DivisorClass ellhat)
      : data_(std::move(data)), hhat_(std::move(hhat)), ellhat_(std::move(ellhat)) {}

  SurfaceData data_;
  DivisorClass hhat_;
  DivisorClass ellhat_;
};

/// A1: v is primitive, isotropic and gcd(r, deg c₁, s) = 1.
inline bool check_a1(const MukaiVector& v, const DivisorClass& H) {
  if (!is_primitive(v) || !is_isotropic(v)) return false;
  BigInt g = BigInt::gcd(v.r, intersect(v.c1, H));
  return BigInt::gcd(g, v.s) == BigInt(1);
}

/// A2: deg c₁ = 0 and r > 1.
inline bool check_a2(const MukaiVector& v, const DivisorClass& H) {
  return intersect(v.c1, H).is_zero() && v.r > BigInt(1);
}

/// A3 is not computable at lattice level; it is granted as an axiom exactly
/// when the surface is reflexive and the non-effectivity certificate holds.
struct A3Status {
  bool granted = false;
  std::string reason;
};

inline A3Status a3_status(bool reflexive, bool non_effectivity_holds) {
  A3Status st;
  st.granted = reflexive && non_effectivity_holds;
  st.reason = st.granted
                  ? "granted: reflexive surface with non-effectivity certificate"
                  : "not granted: requires a reflexive surface and the non-effectivity certificate";
  return st;
}

/// Riemann-Roch for a line bundle on a K3: χ(O(D)) = 2 + D²/2.
inline BigInt line_bundle_chi(const DivisorClass& d) {
  BigInt d2 = self_intersection(d);
  if (!d2.is_even()) throw InternalError("odd self-intersection on an even lattice");
  return BigInt(2) + d2 / BigInt(2);
}

/// Expected dimension of the moduli space of stable sheaves: v² + 2.
inline BigInt moduli_dim(const MukaiVector& v) { return mukai_pair(v, v) + BigInt(2); }

/// Replays the extension-sequence accounting that recovers the canonical
/// vector: v(O) + v(I_p(ℓ+2H)) gives the twisted bundle, untwisting by −H
/// lands on (2, ℓ, −3). Intermediate values are exposed for inspection.
struct CanonicalReconstruction {
  MukaiVector ideal_point;          // v(I_p) = (1,0,0)
  MukaiVector ideal_twisted;        // v(I_p(ℓ+2H))
  MukaiVector extension;            // v(E(H)) = v(O) + v(I_p(ℓ+2H))
  BigInt chi_extension;             // χ(E(H)), must be 1
  MukaiVector result;               // v(E) = (2, ℓ, −3)
};

inline CanonicalReconstruction reconstruct_canonical_vector(const ReflexiveSurface& s) {
  DivisorClass zero = DivisorClass::zero(s.lattice());
  DivisorClass e = s.ell() + BigInt(2) * s.H();
  MukaiVector structure_sheaf(1, zero, 1);
  MukaiVector ideal_point(1, zero, 0);  // χ(I_p) = 1, so s = χ − r = 0
  MukaiVector ideal_twisted = twist(ideal_point, e);
  MukaiVector extension = structure_sheaf + ideal_twisted;
  MukaiVector result = twist(extension, -s.H());
  return CanonicalReconstruction{std::move(ideal_point), std::move(ideal_twisted), extension,
                                 euler_char(extension), std::move(result)};
}

}  // namespace k3fm
