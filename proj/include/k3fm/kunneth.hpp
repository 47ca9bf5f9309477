#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3fm/errors.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/mukai.hpp"
#include "k3fm/surface.hpp"

namespace k3fm {

/// Cup product of (H⁰, H², H⁴) triples on one surface, truncated at degree 4.
inline MukaiVector cup(const MukaiVector& a, const MukaiVector& b) {
  return MukaiVector(a.r * b.r, a.r * b.c1 + b.r * a.c1,
                     a.r * b.s + b.r * a.s + intersect(a.c1, b.c1));
}

/// √td of a K3 surface as a class triple: (1, 0, 1); its square is td = (1, 0, 2).
inline MukaiVector sqrt_td(const LatticePtr& lattice) {
  return MukaiVector(1, DivisorClass::zero(lattice), 1);
}

/// Chern character of a line bundle O(D): exp(D) truncated at degree 4.
/// D²/2 is an integer because the lattice is even.
inline MukaiVector exp_class(const DivisorClass& d) {
  BigInt d2 = self_intersection(d);
  if (!d2.is_even()) throw InternalError("odd self-intersection on an even lattice");
  return MukaiVector(1, d, d2 / BigInt(2));
}

/// Algebraic Künneth-decomposed even cohomology class on X × X̂. Both factors
/// share one Picard lattice under the canonical identification, so divisor
/// blocks on either side use the same basis. The distinguished symbol ι is
/// the H²⊗H² component of the graph of the identification; it absorbs the
/// transcendental part and is only ever paired through the rules in cup().
///
/// Blocks, indexed by bidegree (p,q) with p,q ∈ {0,2,4}:
///   c00            scalar
///   c20, c02       divisor on X resp. X̂
///   c22, c22_iota  basis ⊗ basis matrix plus the ι coefficient
///   c40, c04       point-class coefficients [pt]⊗1, 1⊗[pt]
///   c42, c24       [pt]⊗divisor resp. divisor⊗[pt]
///   c44            [pt]⊗[pt] coefficient
/// Entries are exact rationals; anything surfacing as a Mukai vector must be
/// integral and is asserted so in the push-forwards.
struct ProductClass {
  LatticePtr lattice;
  Rational c00;
  std::vector<Rational> c20, c02;
  std::vector<std::vector<Rational>> c22;
  Rational c22_iota;
  Rational c40, c04;
  std::vector<Rational> c42, c24;
  Rational c44;

  explicit ProductClass(LatticePtr lat)
      : lattice(std::move(lat)),
        c20(static_cast<size_t>(lattice->rank())),
        c02(static_cast<size_t>(lattice->rank())),
        c22(static_cast<size_t>(lattice->rank()),
            std::vector<Rational>(static_cast<size_t>(lattice->rank()))),
        c42(static_cast<size_t>(lattice->rank())),
        c24(static_cast<size_t>(lattice->rank())) {}

  friend ProductClass operator+(const ProductClass& a, const ProductClass& b) {
    require_same_lattice(a.lattice, b.lattice);
    ProductClass r(a.lattice);
    const size_t n = a.c20.size();
    r.c00 = a.c00 + b.c00;
    for (size_t i = 0; i < n; ++i) {
      r.c20[i] = a.c20[i] + b.c20[i];
      r.c02[i] = a.c02[i] + b.c02[i];
      r.c42[i] = a.c42[i] + b.c42[i];
      r.c24[i] = a.c24[i] + b.c24[i];
      for (size_t j = 0; j < n; ++j) r.c22[i][j] = a.c22[i][j] + b.c22[i][j];
    }
    r.c22_iota = a.c22_iota + b.c22_iota;
    r.c40 = a.c40 + b.c40;
    r.c04 = a.c04 + b.c04;
    r.c44 = a.c44 + b.c44;
    return r;
  }

  friend ProductClass operator-(const ProductClass& a, const ProductClass& b) {
    return a + (Rational(-1) * b);
  }

  friend ProductClass operator*(const Rational& k, const ProductClass& a) {
    ProductClass r(a.lattice);
    const size_t n = a.c20.size();
    r.c00 = k * a.c00;
    for (size_t i = 0; i < n; ++i) {
      r.c20[i] = k * a.c20[i];
      r.c02[i] = k * a.c02[i];
      r.c42[i] = k * a.c42[i];
      r.c24[i] = k * a.c24[i];
      for (size_t j = 0; j < n; ++j) r.c22[i][j] = k * a.c22[i][j];
    }
    r.c22_iota = k * a.c22_iota;
    r.c40 = k * a.c40;
    r.c04 = k * a.c04;
    r.c44 = k * a.c44;
    return r;
  }

  friend bool operator==(const ProductClass& a, const ProductClass& b) {
    require_same_lattice(a.lattice, b.lattice);
    return a.c00 == b.c00 && a.c20 == b.c20 && a.c02 == b.c02 && a.c22 == b.c22 &&
           a.c22_iota == b.c22_iota && a.c40 == b.c40 && a.c04 == b.c04 && a.c42 == b.c42 &&
           a.c24 == b.c24 && a.c44 == b.c44;
  }
  friend bool operator!=(const ProductClass& a, const ProductClass& b) { return !(a == b); }
};

/// Multiplicative unit 1⊗1.
inline ProductClass product_unit(const LatticePtr& lattice) {
  ProductClass r(lattice);
  r.c00 = Rational(1);
  return r;
}

/// The bare ι class (for building test classes and the graph class).
inline ProductClass iota_class(const LatticePtr& lattice) {
  ProductClass r(lattice);
  r.c22_iota = Rational(1);
  return r;
}

/// π* of a class triple on X: components land in the (p, 0) blocks.
inline ProductClass pullback_x(const MukaiVector& u) {
  ProductClass r(u.lattice());
  r.c00 = Rational(u.r);
  for (size_t i = 0; i < r.c20.size(); ++i) r.c20[i] = Rational(u.c1.coord(static_cast<int>(i)));
  r.c40 = Rational(u.s);
  return r;
}

/// π̂* of a class triple on X̂: components land in the (0, q) blocks.
inline ProductClass pullback_xhat(const MukaiVector& u) {
  ProductClass r(u.lattice());
  r.c00 = Rational(u.r);
  for (size_t i = 0; i < r.c02.size(); ++i) r.c02[i] = Rational(u.c1.coord(static_cast<int>(i)));
  r.c04 = Rational(u.s);
  return r;
}

namespace detail {

inline std::vector<Rational> gram_apply(const LatticePtr& lat, const std::vector<Rational>& v) {
  const size_t n = v.size();
  std::vector<Rational> out(n);
  for (size_t i = 0; i < n; ++i) {
    Rational acc;
    for (size_t j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      acc += Rational(lat->gram(static_cast<int>(i), static_cast<int>(j))) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

inline Rational pair_divisors(const LatticePtr& lat, const std::vector<Rational>& a,
                              const std::vector<Rational>& b) {
  auto gb = gram_apply(lat, b);
  Rational acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * gb[i];
  return acc;
}

inline bool all_zero(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline bool all_zero(const std::vector<std::vector<Rational>>& m) {
  for (const auto& row : m)
    if (!all_zero(row)) return false;
  return true;
}

}  // namespace detail

/// Cup product on the modeled blocks. Divisor·divisor multiplies through the
/// Gram form of the factor it lives on; point classes annihilate their own
/// factor. ι pairs as the graph of the identification:
///   ι ∪ π*D   = [pt] ⊗ D     (block (4,2))
///   ι ∪ π̂*D̂  = D̂ ⊗ [pt]    (block (2,4))
///   ι ∪ (x⊗y) = ⟨x,y⟩·[pt⊗pt]
///   ι ∪ π*[pt] = ι ∪ π̂*[pt] = 0   (degree overflow on a surface factor)
/// ι ∪ ι needs the transcendental lattice and is a hard error.
inline ProductClass cup(const ProductClass& a, const ProductClass& b) {
  require_same_lattice(a.lattice, b.lattice);
  const LatticePtr& lat = a.lattice;
  const size_t n = a.c20.size();

  if (!a.c22_iota.is_zero() && !b.c22_iota.is_zero())
    throw UnsupportedProductError("iota ∪ iota is outside the modeled algebra");

  ProductClass r(lat);
  r.c00 = a.c00 * b.c00;

  for (size_t i = 0; i < n; ++i) {
    r.c20[i] = a.c00 * b.c20[i] + b.c00 * a.c20[i];
    r.c02[i] = a.c00 * b.c02[i] + b.c00 * a.c02[i];
  }

  r.c40 = a.c00 * b.c40 + b.c00 * a.c40 + detail::pair_divisors(lat, a.c20, b.c20);
  r.c04 = a.c00 * b.c04 + b.c00 * a.c04 + detail::pair_divisors(lat, a.c02, b.c02);

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      r.c22[i][j] = a.c00 * b.c22[i][j] + b.c00 * a.c22[i][j] + a.c20[i] * b.c02[j] +
                    b.c20[i] * a.c02[j];
  r.c22_iota = a.c00 * b.c22_iota + b.c00 * a.c22_iota;

  auto ga20 = detail::gram_apply(lat, a.c20);
  auto gb20 = detail::gram_apply(lat, b.c20);
  auto ga02 = detail::gram_apply(lat, a.c02);
  auto gb02 = detail::gram_apply(lat, b.c02);

  for (size_t j = 0; j < n; ++j) {
    Rational acc = a.c00 * b.c42[j] + b.c00 * a.c42[j] + a.c40 * b.c02[j] + b.c40 * a.c02[j] +
                   b.c22_iota * a.c20[j] + a.c22_iota * b.c20[j];
    for (size_t i = 0; i < n; ++i) acc += ga20[i] * b.c22[i][j] + gb20[i] * a.c22[i][j];
    r.c42[j] = acc;
  }
  for (size_t i = 0; i < n; ++i) {
    Rational acc = a.c00 * b.c24[i] + b.c00 * a.c24[i] + a.c04 * b.c20[i] + b.c04 * a.c20[i] +
                   b.c22_iota * a.c02[i] + a.c22_iota * b.c02[i];
    for (size_t j = 0; j < n; ++j) acc += b.c22[i][j] * ga02[j] + a.c22[i][j] * gb02[j];
    r.c24[i] = acc;
  }

  {
    Rational acc = a.c00 * b.c44 + b.c00 * a.c44 + a.c40 * b.c04 + b.c40 * a.c04;
    acc += detail::pair_divisors(lat, a.c20, b.c24) + detail::pair_divisors(lat, b.c20, a.c24);
    acc += detail::pair_divisors(lat, a.c02, b.c42) + detail::pair_divisors(lat, b.c02, a.c42);
    // (x⊗y) ∪ (x'⊗y') = (x·x')(y·y'), summed over both matrices
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (a.c22[i][j].is_zero()) continue;
        for (size_t k = 0; k < n; ++k)
          for (size_t l = 0; l < n; ++l) {
            if (b.c22[k][l].is_zero()) continue;
            acc += a.c22[i][j] * b.c22[k][l] *
                   Rational(lat->gram(static_cast<int>(i), static_cast<int>(k)) *
                            lat->gram(static_cast<int>(j), static_cast<int>(l)));
          }
      }
    // ι against a pure (2,2) tensor: ⟨x, y⟩ per matrix entry
    if (!a.c22_iota.is_zero() || !b.c22_iota.is_zero()) {
      Rational trace_a, trace_b;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          Rational g(lat->gram(static_cast<int>(i), static_cast<int>(j)));
          trace_a += g * a.c22[i][j];
          trace_b += g * b.c22[i][j];
        }
      acc += a.c22_iota * trace_b + b.c22_iota * trace_a;
    }
    r.c44 = acc;
  }
  return r;
}

namespace detail {

inline BigInt integral(const Rational& v, const char* what) {
  if (!v.is_integer())
    throw InternalError(std::string("non-integral push-forward component ") + what + " = " +
                        v.to_string());
  return v.as_integer();
}

inline DivisorClass integral_divisor(const LatticePtr& lat, const std::vector<Rational>& v,
                                     const char* what) {
  std::vector<BigInt> coords(v.size());
  for (size_t i = 0; i < v.size(); ++i) coords[i] = integral(v[i], what);
  return DivisorClass(lat, std::move(coords));
}

}  // namespace detail

/// Integration over the X factor: extracts the (4,q) blocks as a class
/// triple on X̂. Everything of lower X-degree integrates to zero.
inline MukaiVector pushforward_xhat(const ProductClass& a) {
  return MukaiVector(detail::integral(a.c40, "(4,0)"),
                     detail::integral_divisor(a.lattice, a.c42, "(4,2)"),
                     detail::integral(a.c44, "(4,4)"));
}

/// Integration over the X̂ factor: extracts the (p,4) blocks onto X.
inline MukaiVector pushforward_x(const ProductClass& a) {
  return MukaiVector(detail::integral(a.c04, "(0,4)"),
                     detail::integral_divisor(a.lattice, a.c24, "(2,4)"),
                     detail::integral(a.c44, "(4,4)"));
}

/// Chern character of the structure sheaf of the graph of the identification
/// X̂ → X: the graph class ([pt]⊗1 + ι + 1⊗[pt]) corrected by the push-forward
/// of td⁻¹ of the normal bundle, which contributes −2·[pt⊗pt].
inline ProductClass ch_graph_structure(const ReflexiveSurface& s) {
  ProductClass r(s.lattice());
  r.c40 = Rational(1);
  r.c04 = Rational(1);
  r.c22_iota = Rational(1);
  r.c44 = Rational(-2);
  return r;
}

/// All Künneth blocks of the kernel's Chern character, as integers.
struct KernelReport {
  BigInt gamma00;
  DivisorClass gamma20, gamma02;
  std::vector<std::vector<BigInt>> gamma22;
  BigInt gamma22_iota;
  BigInt gamma40, gamma04;
  DivisorClass gamma42, gamma24;
  BigInt gamma44;
};

/// ch(Q) assembled from the defining extension of the normalized kernel:
///   ch(Q) = [ π̂*ch O(−ℓ̂−2Ĥ) + (1 − ch O_Γ) ∪ π*ch O(ℓ+2H) ]
///           ∪ π̂*ch O(Ĥ) ∪ π*ch O(−H).
inline ProductClass ch_kernel_q(const ReflexiveSurface& s) {
  const LatticePtr& lat = s.lattice();
  DivisorClass e = s.ell() + BigInt(2) * s.H();
  DivisorClass w = -s.ellhat() - BigInt(2) * s.Hhat();
  ProductClass middle = pullback_xhat(exp_class(w)) +
                        cup(product_unit(lat) - ch_graph_structure(s), pullback_x(exp_class(e)));
  ProductClass gamma = cup(middle, pullback_xhat(exp_class(s.Hhat())));
  return cup(gamma, pullback_x(exp_class(-s.H())));
}

/// ch(Q*): the degree-2k parts pick up (−1)^k, so the (2,0), (0,2), (4,2)
/// and (2,4) blocks flip sign.
inline ProductClass dual_kernel(const ProductClass& q) {
  ProductClass r = q;
  for (auto& v : r.c20) v = -v;
  for (auto& v : r.c02) v = -v;
  for (auto& v : r.c42) v = -v;
  for (auto& v : r.c24) v = -v;
  return r;
}

inline KernelReport kernel_report(const ProductClass& q) {
  KernelReport rep{detail::integral(q.c00, "(0,0)"),
                   detail::integral_divisor(q.lattice, q.c20, "(2,0)"),
                   detail::integral_divisor(q.lattice, q.c02, "(0,2)"),
                   {},
                   detail::integral(q.c22_iota, "iota"),
                   detail::integral(q.c40, "(4,0)"),
                   detail::integral(q.c04, "(0,4)"),
                   detail::integral_divisor(q.lattice, q.c42, "(4,2)"),
                   detail::integral_divisor(q.lattice, q.c24, "(2,4)"),
                   detail::integral(q.c44, "(4,4)")};
  const size_t n = q.c20.size();
  rep.gamma22.assign(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rep.gamma22[i][j] = detail::integral(q.c22[i][j], "(2,2)");
  return rep;
}

/// The expected middle block (ℓ+2H)⊗Ĥ + H⊗ℓ̂ − ι, for the kernel identity check.
inline ProductClass expected_gamma22(const ReflexiveSurface& s) {
  ProductClass r(s.lattice());
  DivisorClass e = s.ell() + BigInt(2) * s.H();
  const size_t n = r.c22.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      r.c22[i][j] = Rational(e.coord(static_cast<int>(i)) * s.Hhat().coord(static_cast<int>(j)) +
                             s.H().coord(static_cast<int>(i)) * s.ellhat().coord(static_cast<int>(j)));
  r.c22_iota = Rational(-1);
  return r;
}

/// Caches the kernel characters so transform sweeps assemble them once.
class KunnethContext {
 public:
  explicit KunnethContext(ReflexiveSurface surface)
      : surface_(std::move(surface)),
        kernel_(ch_kernel_q(surface_)),
        kernel_dual_(dual_kernel(kernel_)) {}

  const ReflexiveSurface& surface() const { return surface_; }
  const ProductClass& kernel() const { return kernel_; }
  const ProductClass& kernel_dual() const { return kernel_dual_; }

  /// v(S_X(F)) = π̂_*( π*(v(F)·√td) ∪ ch Q ) ∪ √td.
  MukaiVector transform(const MukaiVector& u) const {
    require_same_lattice(u.lattice(), surface_.lattice());
    MukaiVector lifted = cup(u, sqrt_td(surface_.lattice()));
    MukaiVector pushed = pushforward_xhat(cup(pullback_x(lifted), kernel_));
    return cup(pushed, sqrt_td(surface_.lattice()));
  }

  /// v(S_X̂(G)) = π_*( π̂*(v(G)·√td) ∪ ch Q* ) ∪ √td.
  MukaiVector transform_back(const MukaiVector& u) const {
    require_same_lattice(u.lattice(), surface_.lattice());
    MukaiVector lifted = cup(u, sqrt_td(surface_.lattice()));
    MukaiVector pushed = pushforward_x(cup(pullback_xhat(lifted), kernel_dual_));
    return cup(pushed, sqrt_td(surface_.lattice()));
  }

 private:
  ReflexiveSurface surface_;
  ProductClass kernel_;
  ProductClass kernel_dual_;
};

/// One-shot Grothendieck-Riemann-Roch route for the transform vector.
inline MukaiVector grr_transform(const ReflexiveSurface& s, const MukaiVector& u) {
  return KunnethContext(s).transform(u);
}

inline MukaiVector grr_transform_backward(const ReflexiveSurface& s, const MukaiVector& u) {
  return KunnethContext(s).transform_back(u);
}

}  // namespace k3fm
