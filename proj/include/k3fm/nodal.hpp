#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3fm/errors.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/surface.hpp"

namespace k3fm {

/// Exhaustive list of classes D with D² = −2 and 1 ≤ D·H ≤ dmax, in
/// canonical order (degree, then coordinates). `box` documents the derived
/// per-coordinate search bound that certifies exhaustiveness.
struct NodalReport {
  std::vector<DivisorClass> classes;
  int dmax = 0;
  bool exhaustive = false;
  std::vector<BigInt> box;
};

namespace detail {

/// Integer solutions of (x + c)² ≤ t form an interval; empty if none.
struct IntegerInterval {
  BigInt lo, hi;
  bool empty = true;
};

inline IntegerInterval solve_shifted_square(const Rational& c, const Rational& t) {
  IntegerInterval out;
  if (t.sign() < 0) return out;
  BigInt span = BigInt::isqrt(t.floor()) + BigInt(2);
  BigInt cf = c.floor();
  BigInt lo_range = -span - cf - BigInt(1);
  BigInt hi_range = span - cf + BigInt(1);
  auto below_upper = [&](const BigInt& x) {  // x ≤ √t − c
    Rational xc = Rational(x) + c;
    return xc.sign() <= 0 || xc * xc <= t;
  };
  auto above_lower = [&](const BigInt& x) {  // x ≥ −√t − c
    Rational xc = Rational(x) + c;
    return xc.sign() >= 0 || xc * xc <= t;
  };
  BigInt lo = lo_range, hi = hi_range;
  while (lo < hi) {  // max x with below_upper
    BigInt mid = BigInt::floordiv(lo + hi + BigInt(1), BigInt(2));
    if (below_upper(mid))
      lo = mid;
    else
      hi = mid - BigInt(1);
  }
  out.hi = lo;
  lo = lo_range;
  hi = hi_range;
  while (lo < hi) {  // min x with above_lower
    BigInt mid = BigInt::floordiv(lo + hi, BigInt(2));
    if (above_lower(mid))
      hi = mid;
    else
      lo = mid + BigInt(1);
  }
  out.lo = lo;
  out.empty = out.lo > out.hi;
  return out;
}

}  // namespace detail

/// Enumerates all D with D² = −2, 1 ≤ D·H ≤ dmax.
///
/// Writing D = (D·H/H²)H + D⊥ with D⊥ in the (negative definite) orthogonal
/// complement of H gives the positive definite majorant
///   q₊(x) = 2(x·H)²/H² − x²,
/// and q₊(D) = 2(D·H)²/H² + 2 ≤ 2·dmax²/H² + 2 for every admissible D. The
/// search runs an exact Fincke-Pohst style recursion over the LDL
/// decomposition of q₊ in rational arithmetic.
inline NodalReport nodal_classes(const DivisorClass& H, int dmax) {
  if (dmax < 1) throw PreconditionError("nodal search requires max degree >= 1");
  const LatticePtr& lat = H.lattice();
  const size_t n = static_cast<size_t>(lat->rank());
  BigInt h2 = self_intersection(H);
  if (h2.sign() <= 0)
    throw SignatureError("polarization has non-positive self-intersection " + h2.to_string());

  // gh = G·h, majorant M = (2/h2)·gh·ghᵀ − G
  std::vector<BigInt> gh(n);
  for (size_t i = 0; i < n; ++i) {
    BigInt acc;
    for (size_t j = 0; j < n; ++j) acc += lat->gram(static_cast<int>(i), static_cast<int>(j)) * H.coord(static_cast<int>(j));
    gh[i] = acc;
  }
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = Rational(BigInt(2) * gh[i] * gh[j], h2) -
                Rational(lat->gram(static_cast<int>(i), static_cast<int>(j)));

  const Rational budget = Rational(BigInt(2) * BigInt(dmax) * BigInt(dmax), h2) + Rational(2);

  // documented coordinate box: |x_i| ≤ √(budget · (M⁻¹)_ii), via Gauss-Jordan
  std::vector<BigInt> box(n);
  {
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
      aug[i][n + i] = Rational(1);
    }
    for (size_t k = 0; k < n; ++k) {
      size_t p = k;
      while (p < n && aug[p][k].is_zero()) ++p;
      if (p == n) throw SignatureError("orthogonal complement of H is degenerate");
      std::swap(aug[k], aug[p]);
      Rational piv = aug[k][k];
      for (size_t c = 0; c < 2 * n; ++c) aug[k][c] /= piv;
      for (size_t r = 0; r < n; ++r) {
        if (r == k || aug[r][k].is_zero()) continue;
        Rational f = aug[r][k];
        for (size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[k][c];
      }
    }
    for (size_t i = 0; i < n; ++i) {
      Rational radius2 = budget * aug[i][n + i];
      if (radius2.sign() < 0) throw SignatureError("majorant is not positive definite");
      box[i] = BigInt::isqrt(radius2.floor());
    }
  }

  // LDL decomposition q₊(x) = Σ d_k (x_k + Σ_{j>k} u_kj x_j)²
  std::vector<Rational> d(n);
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(n));
  {
    auto a = m;
    for (size_t k = 0; k < n; ++k) {
      if (a[k][k].sign() <= 0)
        throw SignatureError("orthogonal complement of H is not negative definite");
      d[k] = a[k][k];
      for (size_t j = k + 1; j < n; ++j) u[k][j] = a[k][j] / a[k][k];
      for (size_t i = k + 1; i < n; ++i)
        for (size_t j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / a[k][k];
    }
  }

  std::vector<DivisorClass> found;
  std::vector<BigInt> coords(n);
  std::function<void(size_t, const Rational&)> descend = [&](size_t level, const Rational& used) {
    size_t k = level - 1;
    Rational center;
    for (size_t j = k + 1; j < n; ++j) center += u[k][j] * Rational(coords[j]);
    auto range = detail::solve_shifted_square(center, (budget - used) / d[k]);
    if (range.empty) return;
    for (BigInt x = range.lo; x <= range.hi; x += BigInt(1)) {
      coords[k] = x;
      Rational shifted = Rational(x) + center;
      Rational used_next = used + d[k] * shifted * shifted;
      if (k == 0) {
        DivisorClass cand(lat, coords);
        if (self_intersection(cand) == BigInt(-2)) {
          BigInt deg = intersect(cand, H);
          if (deg >= BigInt(1) && deg <= BigInt(dmax)) found.push_back(std::move(cand));
        }
      } else {
        descend(k, used_next);
      }
    }
    coords[k] = BigInt(0);
  };
  descend(n, Rational(0));

  std::sort(found.begin(), found.end(), [&](const DivisorClass& a, const DivisorClass& b) {
    BigInt da = intersect(a, H), db = intersect(b, H);
    if (da != db) return da < db;
    for (size_t i = 0; i < n; ++i)
      if (a.coord(static_cast<int>(i)) != b.coord(static_cast<int>(i)))
        return a.coord(static_cast<int>(i)) < b.coord(static_cast<int>(i));
    return false;
  });

  NodalReport rep;
  rep.classes = std::move(found);
  rep.dmax = dmax;
  rep.exhaustive = true;
  rep.box = std::move(box);
  return rep;
}

/// Outcome of the non-effectivity case analysis for E = ℓ + 2H.
struct NonEffectivityResult {
  bool holds = false;
  std::optional<DivisorClass> blocking;
  BigInt e_square;
  BigInt chi_e;
};

/// Certifies the sufficient criterion that E = ℓ + 2H carries no effective
/// representative: a hypothetical effective E must split off a (−2)-class of
/// degree 1, directly or as the complement of a degree-3 one. The certificate
/// never claims effectivity, only its exclusion.
inline NonEffectivityResult non_effectivity_certificate(const SurfaceData& s,
                                                        const NodalReport& nodal) {
  if (!nodal.exhaustive) throw PreconditionError("non-exhaustive nodal report");
  if (nodal.dmax < 3)
    throw PreconditionError("nodal report must cover degrees up to 3, got " +
                            std::to_string(nodal.dmax));
  NonEffectivityResult res;
  DivisorClass e = s.ell + BigInt(2) * s.H;
  res.e_square = self_intersection(e);
  res.chi_e = line_bundle_chi(e);
  for (const auto& d : nodal.classes) {
    BigInt deg = intersect(d, s.H);
    if (deg == BigInt(1)) {
      res.blocking = d;
      return res;
    }
    if (deg == BigInt(3)) {
      DivisorClass f = e - d;
      if (intersect(f, s.H) == BigInt(1) && self_intersection(f) == BigInt(-2)) {
        res.blocking = d;
        return res;
      }
    }
  }
  res.holds = true;
  return res;
}

}  // namespace k3fm
