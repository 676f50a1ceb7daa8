#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clifflines {

using BladeMask = std::uint32_t;

// Dense storage is capped here; 2^16 coefficients per element.
inline constexpr int kMaxGenerators = 16;

struct BladeProduct {
  int sign;  // +1 or -1
  BladeMask mask;
};

/// Product of two basis blades in Cliff(r) with e_i^2 = -1. Bit i of a mask
/// stands for e_{i+1}; blades are written in increasing generator order.
BladeProduct blade_product(BladeMask a, BladeMask b);

/// "1" for the scalar blade, otherwise e.g. "e1e3".
std::string blade_name(BladeMask mask);
/// Inverse of blade_name. Throws InvalidArgument on malformed names.
BladeMask parse_blade_name(const std::string& name);

/// Element of Cliff(r), coefficients indexed by blade mask.
class CliffordElement {
 public:
  explicit CliffordElement(int r);

  static CliffordElement scalar(int r, double value);
  /// Generator e_i, 1-based as in the usual notation.
  static CliffordElement generator(int r, int i);
  static CliffordElement blade(int r, BladeMask mask, double value = 1.0);

  int r() const { return r_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](BladeMask mask) const { return coeffs_[mask]; }
  double& operator[](BladeMask mask) { return coeffs_[mask]; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator*=(double s);

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  int r_;
  std::vector<double> coeffs_;
};

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator*(double s, CliffordElement a);

/// Bilinear extension of blade_product. Throws RankMismatch when the
/// elements live in different algebras.
CliffordElement mul(const CliffordElement& a, const CliffordElement& b);

inline CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  return mul(a, b);
}

enum class BaseField { real, complex, quaternion };

/// Cliff(r) as `summands` copies of a full matrix algebra over `base`.
struct AlgebraDescriptor {
  int r = 0;
  BaseField base = BaseField::real;
  long long matrix_size = 1;
  int summands = 1;

  long long real_dimension() const;
  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

int field_dimension(BaseField base);
const char* field_symbol(BaseField base);

/// Table lookup for r mod 8 with Bott periodicity Cliff(r+8) = Cliff(r) (x) R[16].
AlgebraDescriptor classify(int r);

/// Real dimension of the irreducible representation of Cliff(r).
long long min_rep_dim(int r);

/// e.g. "H", "R[8] ⊕ R[8]", "C[16]".
std::string describe(const AlgebraDescriptor& d);

}  // namespace clifflines
