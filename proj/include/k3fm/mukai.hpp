#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fm/errors.hpp"
#include "k3fm/lattice.hpp"

namespace k3fm {

/// Element of H⁰ ⊕ NS ⊕ H⁴ with integer components. For a sheaf F this is
/// the Mukai vector (rk F, c₁(F), s(F)) with s = χ − rk; the bookkeeping
/// identity s = χ − r is documented, not enforced, so the same type also
/// serves as a general integral class triple.
struct MukaiVector {
  BigInt r;
  DivisorClass c1;
  BigInt s;

  MukaiVector(BigInt rank, DivisorClass chern1, BigInt ch2_part)
      : r(std::move(rank)), c1(std::move(chern1)), s(std::move(ch2_part)) {}

  const LatticePtr& lattice() const { return c1.lattice(); }

  friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
    return a.r == b.r && a.c1 == b.c1 && a.s == b.s;
  }
  friend bool operator!=(const MukaiVector& a, const MukaiVector& b) { return !(a == b); }

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(a.r + b.r, a.c1 + b.c1, a.s + b.s);
  }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(a.r - b.r, a.c1 - b.c1, a.s - b.s);
  }
  friend MukaiVector operator-(const MukaiVector& a) { return MukaiVector(-a.r, -a.c1, -a.s); }
  friend MukaiVector operator*(const BigInt& k, const MukaiVector& a) {
    return MukaiVector(k * a.r, k * a.c1, k * a.s);
  }

  std::string to_string() const {
    return "(" + r.to_string() + "; " + c1.to_string() + "; " + s.to_string() + ")";
  }
};

/// Mukai pairing: (a,b,c)·(a',b',c') = -ac' + b·b' - ca'.
inline BigInt mukai_pair(const MukaiVector& u, const MukaiVector& v) {
  return -(u.r * v.s) + intersect(u.c1, v.c1) - u.s * v.r;
}

/// χ = r + s (on a K3 surface s = χ − r).
inline BigInt euler_char(const MukaiVector& u) { return u.r + u.s; }

/// Euler pairing χ(E,F) = Σ (−1)^i dim Ext^i(E,F) = −⟨v(E),v(F)⟩.
inline BigInt euler_pairing(const MukaiVector& u, const MukaiVector& v) {
  return -mukai_pair(u, v);
}

/// Multiplication by exp(d): the vector of F ⊗ O(d).
inline MukaiVector twist(const MukaiVector& u, const DivisorClass& d) {
  require_same_lattice(u.lattice(), d.lattice());
  BigInt d2 = self_intersection(d);
  if (!d2.is_even()) throw InternalError("odd self-intersection on an even lattice");
  return MukaiVector(u.r, u.c1 + u.r * d, u.s + intersect(u.c1, d) + u.r * (d2 / BigInt(2)));
}

/// Vector of the dual sheaf: negates the degree-2 part.
inline MukaiVector dual_vector(const MukaiVector& u) { return MukaiVector(u.r, -u.c1, u.s); }

inline bool is_isotropic(const MukaiVector& u) { return mukai_pair(u, u).is_zero(); }

/// gcd of all components equals 1. The zero vector is not primitive.
inline bool is_primitive(const MukaiVector& u) {
  BigInt g = u.r.abs();
  for (const auto& c : u.c1.coords()) g = BigInt::gcd(g, c);
  g = BigInt::gcd(g, u.s);
  return g == BigInt(1);
}

}  // namespace k3fm
