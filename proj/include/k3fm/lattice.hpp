#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "k3fm/bigint.hpp"
#include "k3fm/errors.hpp"
#include "k3fm/rational.hpp"

namespace k3fm {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Sylvester signature of a symmetric rational matrix by exact congruence
/// diagonalization. The input is consumed.
inline Signature quadratic_form_signature(std::vector<std::vector<Rational>> a) {
  const size_t n = a.size();
  Signature sig;
  for (size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t j = k + 1;
      for (; j < n; ++j)
        if (!a[j][j].is_zero()) break;
      if (j < n) {
        std::swap(a[k], a[j]);
        for (auto& row : a) std::swap(row[k], row[j]);
      } else {
        // all remaining diagonal entries vanish; a nonzero off-diagonal
        // entry can be folded onto the diagonal (new pivot 2*a[k][j])
        for (j = k + 1; j < n; ++j)
          if (!a[k][j].is_zero()) break;
        if (j < n) {
          for (size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
          for (size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
        }
      }
    }
    if (a[k][k].is_zero()) {
      ++sig.zero;
      continue;
    }
    if (a[k][k].sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / a[k][k];
      for (size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
  }
  return sig;
}

class PicardLattice;
using LatticePtr = std::shared_ptr<const PicardLattice>;

/// Integer symmetric bilinear form of signature (1, rank-1) with even
/// diagonal: the algebraic divisor classes of a polarized K3 surface.
/// Instances are immutable and shared; class membership is decided by
/// handle identity, never by structural comparison.
class PicardLattice {
 public:
  /// Lists every violated lattice invariant; empty means admissible.
  static std::vector<std::string> validate(const std::vector<std::vector<BigInt>>& gram) {
    std::vector<std::string> problems;
    const size_t n = gram.size();
    if (n == 0) {
      problems.push_back("gram matrix is empty");
      return problems;
    }
    for (size_t i = 0; i < n; ++i)
      if (gram[i].size() != n) {
        problems.push_back("gram matrix is not square");
        return problems;
      }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (gram[i][j] != gram[j][i]) {
          problems.push_back("gram matrix is not symmetric at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
          return problems;
        }
    for (size_t i = 0; i < n; ++i)
      if (!gram[i][i].is_even())
        problems.push_back("diagonal entry " + std::to_string(i) + " is odd (lattice must be even)");
    std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) work[i][j] = Rational(gram[i][j]);
    Signature sig = quadratic_form_signature(std::move(work));
    if (sig.zero != 0) problems.push_back("gram matrix is degenerate");
    if (sig.positive != 1)
      problems.push_back("signature is (" + std::to_string(sig.positive) + "," +
                         std::to_string(sig.negative) + "), expected (1," +
                         std::to_string(n - 1) + ")");
    return problems;
  }

  static LatticePtr create(std::vector<std::vector<BigInt>> gram,
                           std::vector<std::string> labels = {}) {
    auto problems = validate(gram);
    if (!problems.empty()) {
      std::string msg = "invalid Picard lattice:";
      for (const auto& p : problems) msg += " " + p + ";";
      throw LatticeError(msg);
    }
    if (!labels.empty() && labels.size() != gram.size())
      throw LatticeError("label count does not match rank");
    return LatticePtr(new PicardLattice(std::move(gram), std::move(labels)));
  }

  int rank() const { return static_cast<int>(gram_.size()); }
  const BigInt& gram(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const std::vector<std::vector<BigInt>>& gram_matrix() const { return gram_; }
  const Signature& signature() const { return signature_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  PicardLattice(std::vector<std::vector<BigInt>> gram, std::vector<std::string> labels)
      : gram_(std::move(gram)), labels_(std::move(labels)) {
    std::vector<std::vector<Rational>> work(gram_.size(), std::vector<Rational>(gram_.size()));
    for (size_t i = 0; i < gram_.size(); ++i)
      for (size_t j = 0; j < gram_.size(); ++j) work[i][j] = Rational(gram_[i][j]);
    signature_ = quadratic_form_signature(std::move(work));
  }

  std::vector<std::vector<BigInt>> gram_;
  std::vector<std::string> labels_;
  Signature signature_;
};

inline void require_same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (a.get() != b.get())
    throw LatticeMismatchError("classes belong to different Picard lattices");
}

/// Integer divisor class in a fixed Picard-lattice basis. Carries its
/// lattice handle so cross-basis arithmetic is impossible.
class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, std::vector<BigInt> coords)
      : lattice_(std::move(lattice)), coords_(std::move(coords)) {
    if (!lattice_) throw LatticeError("divisor class without a lattice");
    if (static_cast<int>(coords_.size()) != lattice_->rank())
      throw LatticeError("coordinate count does not match lattice rank");
  }

  static DivisorClass zero(const LatticePtr& lattice) {
    return DivisorClass(lattice, std::vector<BigInt>(static_cast<size_t>(lattice->rank())));
  }

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  const BigInt& coord(int i) const { return coords_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice_, b.lattice_);
    std::vector<BigInt> out(a.coords_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] + b.coords_[i];
    return DivisorClass(a.lattice_, std::move(out));
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice_, b.lattice_);
    std::vector<BigInt> out(a.coords_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] - b.coords_[i];
    return DivisorClass(a.lattice_, std::move(out));
  }
  friend DivisorClass operator-(const DivisorClass& a) {
    std::vector<BigInt> out(a.coords_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -a.coords_[i];
    return DivisorClass(a.lattice_, std::move(out));
  }
  friend DivisorClass operator*(const BigInt& k, const DivisorClass& a) {
    std::vector<BigInt> out(a.coords_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = k * a.coords_[i];
    return DivisorClass(a.lattice_, std::move(out));
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    require_same_lattice(a.lattice_, b.lattice_);
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return !(a == b); }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += coords_[i].to_string();
    }
    return out + ")";
  }

 private:
  LatticePtr lattice_;
  std::vector<BigInt> coords_;
};

/// Intersection number through the Gram matrix, exact.
inline BigInt intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a.lattice(), b.lattice());
  const auto* lat = a.lattice().get();
  BigInt total;
  for (int i = 0; i < lat->rank(); ++i) {
    if (a.coord(i).is_zero()) continue;
    BigInt row;
    for (int j = 0; j < lat->rank(); ++j) {
      if (b.coord(j).is_zero()) continue;
      row += lat->gram(i, j) * b.coord(j);
    }
    total += a.coord(i) * row;
  }
  return total;
}

inline BigInt self_intersection(const DivisorClass& d) { return intersect(d, d); }

}  // namespace k3fm
