#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "cantor/errors.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// A finite binary string sigma. The empty string denotes the full-space
/// cylinder. Ordered lexicographically, so canonical generator lists and
/// depth-d member lists are sorted the same way they serialize.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
      require(c == '0' || c == '1', ErrorKind::InvalidArgument,
              "bit string may contain only 0 and 1");
  }

  static BitString repeated(int bit, std::size_t n) {
    return BitString(std::string(n, bit ? '1' : '0'));
  }

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  int bit(std::size_t i) const {
    require(i < bits_.size(), ErrorKind::InvalidArgument, "bit index out of range");
    return bits_[i] == '1' ? 1 : 0;
  }

  bool is_prefix_of(const BitString& other) const {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
  }

  BitString prefix(std::size_t n) const {
    require(n <= bits_.size(), ErrorKind::InvalidArgument, "prefix longer than string");
    return BitString(bits_.substr(0, n));
  }

  BitString extended(int bit) const { return BitString(bits_ + (bit ? '1' : '0')); }

  const std::string& str() const { return bits_; }

  auto operator<=>(const BitString&) const = default;

 private:
  std::string bits_;
};

inline bool comparable(const BitString& a, const BitString& b) {
  return a.is_prefix_of(b) || b.is_prefix_of(a);
}

// mu([sigma]) = 2^-length(sigma)
inline Rational cylinder_measure(const BitString& sigma) {
  return dyadic(-static_cast<long>(sigma.length()));
}

/// A finite approximation of an element Y of Cantor space. Carries no
/// implicit tail: a query beyond length() is a contract violation, never a
/// default bit.
class PointPrefix {
 public:
  PointPrefix() = default;
  explicit PointPrefix(BitString bits) : bits_(std::move(bits)) {}

  std::size_t length() const { return bits_.length(); }

  int bit(std::size_t i) const {
    require(i < bits_.length(), ErrorKind::InsufficientPrecision,
            "point prefix too short for bit " + std::to_string(i));
    return bits_.bit(i);
  }

  const BitString& bits() const { return bits_; }

  auto operator<=>(const PointPrefix&) const = default;

 private:
  BitString bits_;
};

// Three-valued relation between a cylinder [sigma] and the points extending Y.
enum class CylinderFit {
  Inside,     // sigma is a prefix of Y: every extension of Y lies in [sigma]
  Outside,    // sigma and Y diverge: no extension of Y lies in [sigma]
  Undecided,  // Y is a proper prefix of sigma
};

inline CylinderFit classify_cylinder(const BitString& sigma, const PointPrefix& y) {
  if (sigma.is_prefix_of(y.bits())) return CylinderFit::Inside;
  if (y.bits().is_prefix_of(sigma)) return CylinderFit::Undecided;
  return CylinderFit::Outside;
}

}  // namespace cantor
