#pragma once

// Coefficient rings and the grading group (Z/2)^k.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hqft/error.hpp"

namespace hqft {

enum class RingKind { Integers, Rationals, IntegersMod };

class Scalar;

/// Describes one of Z, Q or Z/n. Serialized as "Z", "Q" or "Z/<n>".
class RingDesc {
 public:
  RingDesc() = default;

  static RingDesc integers() { return RingDesc(RingKind::Integers, 0); }
  static RingDesc rationals() { return RingDesc(RingKind::Rationals, 0); }
  /// Throws InputError unless n >= 2.
  static RingDesc integers_mod(std::int64_t n);
  static RingDesc parse(std::string_view text);

  RingKind kind() const noexcept { return kind_; }
  /// Zero unless kind() is IntegersMod.
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_finite() const noexcept { return kind_ == RingKind::IntegersMod; }

  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Parses "3", "-1/2"; fractions are only accepted over Q.
  Scalar parse_scalar(std::string_view text) const;
  /// All residues 0..n-1 in order. Finite rings only.
  std::vector<Scalar> elements() const;

  bool operator==(const RingDesc&) const = default;

 private:
  RingDesc(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::int64_t modulus_ = 0;
};

/// Exact ring element. Residues live in [0, n); fractions are in lowest terms
/// with positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const RingDesc& ring, const mpq_class& value);
  Scalar(const RingDesc& ring, long value);

  const RingDesc& ring() const noexcept { return ring_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

 private:
  void normalize();
  void require_same_ring(const Scalar& other) const;

  RingDesc ring_;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_unit(const Scalar& x);
/// Throws NotAUnit when x has no inverse in its ring.
Scalar scalar_inv(const Scalar& x);

/// Element of pi = (Z/2)^k. Bit j of bits() is coordinate j; the textual form
/// writes coordinate j as character j, so "10" is bits() == 1 for k == 2.
class GroupElement {
 public:
  static constexpr int kMaxRank = 16;

  GroupElement() = default;
  GroupElement(int rank, std::uint32_t bits);

  static GroupElement identity(int rank) { return GroupElement(rank, 0); }
  static GroupElement parse(std::string_view text);

  int rank() const noexcept { return rank_; }
  std::uint32_t bits() const noexcept { return bits_; }
  /// Position of this element in all_elements(rank()).
  std::size_t index() const noexcept { return bits_; }
  bool is_identity() const noexcept { return bits_ == 0; }
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

/// Bitwise XOR. Throws InputError when ranks differ.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return group_mul(a, b);
}

std::size_t group_order(int rank);
std::vector<GroupElement> all_elements(int rank);

}  // namespace hqft
