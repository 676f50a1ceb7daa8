#include "clifflines/clifford.hpp"

#include "clifflines/error.hpp"

#include <bit>
#include <cctype>

namespace clifflines {

namespace {

void check_rank(int r) {
  if (r < 0 || r > kMaxGenerators)
    throw InvalidArgument("generator count " + std::to_string(r) +
                          " outside [0, " + std::to_string(kMaxGenerators) + "]");
}

}  // namespace

BladeProduct blade_product(BladeMask a, BladeMask b) {
  // Moving each generator of b leftwards past the higher generators of a
  // costs one sign flip per transposition.
  int swaps = 0;
  for (BladeMask rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  // Each shared generator contracts as e_i^2 = -1.
  swaps += std::popcount(a & b);
  return {(swaps & 1) ? -1 : 1, a ^ b};
}

std::string blade_name(BladeMask mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out += "e" + std::to_string(i + 1);
  return out;
}

BladeMask parse_blade_name(const std::string& name) {
  if (name == "1") return 0;
  BladeMask mask = 0;
  int last = 0;
  std::size_t pos = 0;
  if (name.empty()) throw InvalidArgument("empty blade name");
  while (pos < name.size()) {
    if (name[pos] != 'e') throw InvalidArgument("malformed blade name '" + name + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (start == pos) throw InvalidArgument("malformed blade name '" + name + "'");
    const int idx = std::stoi(name.substr(start, pos - start));
    if (idx <= last || idx > kMaxGenerators)
      throw InvalidArgument("blade '" + name + "' must list generators in increasing order");
    last = idx;
    mask |= BladeMask{1} << (idx - 1);
  }
  return mask;
}

CliffordElement::CliffordElement(int r) : r_(r) {
  check_rank(r);
  coeffs_.assign(std::size_t{1} << r, 0.0);
}

CliffordElement CliffordElement::scalar(int r, double value) {
  return blade(r, 0, value);
}

CliffordElement CliffordElement::generator(int r, int i) {
  if (i < 1 || i > r) throw InvalidArgument("generator index out of range");
  return blade(r, BladeMask{1} << (i - 1));
}

CliffordElement CliffordElement::blade(int r, BladeMask mask, double value) {
  CliffordElement e(r);
  if (mask >= e.size()) throw InvalidArgument("blade mask out of range");
  e.coeffs_[mask] = value;
  return e;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  if (other.r_ != r_) throw RankMismatch(r_, other.r_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CliffordElement& CliffordElement::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator*(double s, CliffordElement a) { return a *= s; }

CliffordElement mul(const CliffordElement& a, const CliffordElement& b) {
  if (a.r() != b.r()) throw RankMismatch(a.r(), b.r());
  CliffordElement out(a.r());
  const auto n = static_cast<BladeMask>(a.size());
  for (BladeMask i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (BladeMask j = 0; j < n; ++j) {
      if (b[j] == 0.0) continue;
      const auto p = blade_product(i, j);
      out[p.mask] += p.sign * a[i] * b[j];
    }
  }
  return out;
}

int field_dimension(BaseField base) {
  switch (base) {
    case BaseField::real: return 1;
    case BaseField::complex: return 2;
    case BaseField::quaternion: return 4;
  }
  return 1;
}

const char* field_symbol(BaseField base) {
  switch (base) {
    case BaseField::real: return "R";
    case BaseField::complex: return "C";
    case BaseField::quaternion: return "H";
  }
  return "?";
}

long long AlgebraDescriptor::real_dimension() const {
  return summands * matrix_size * matrix_size * field_dimension(base);
}

AlgebraDescriptor classify(int r) {
  if (r < 0) throw InvalidArgument("r must be nonnegative");
  struct Row {
    BaseField base;
    long long size;
    int summands;
  };
  static constexpr Row table[8] = {
      {BaseField::real, 1, 1},        // R
      {BaseField::complex, 1, 1},     // C
      {BaseField::quaternion, 1, 1},  // H
      {BaseField::quaternion, 1, 2},  // H + H
      {BaseField::quaternion, 2, 1},  // H[2]
      {BaseField::complex, 4, 1},     // C[4]
      {BaseField::real, 8, 1},        // R[8]
      {BaseField::real, 8, 2},        // R[8] + R[8]
  };
  const Row& row = table[r % 8];
  long long size = row.size;
  for (int k = 0; k < r / 8; ++k) size *= 16;
  return {r, row.base, size, row.summands};
}

long long min_rep_dim(int r) {
  const auto d = classify(r);
  return d.matrix_size * field_dimension(d.base);
}

std::string describe(const AlgebraDescriptor& d) {
  std::string one = field_symbol(d.base);
  if (d.matrix_size != 1) one += "[" + std::to_string(d.matrix_size) + "]";
  return d.summands == 2 ? one + " ⊕ " + one : one;
}

}  // namespace clifflines
