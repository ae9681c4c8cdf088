#include "hqft/foundations.hpp"

#include <charconv>
#include <ostream>

namespace hqft {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw InputError("not an integer literal: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

// ---------------------------------------------------------------------------
// RingDesc

RingDesc RingDesc::integers_mod(std::int64_t n) {
  if (n < 2) throw InputError("Z/n requires n >= 2, got " + std::to_string(n));
  return RingDesc(RingKind::IntegersMod, n);
}

RingDesc RingDesc::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    std::string_view digits = text.substr(2);
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return integers_mod(n);
  }
  throw InputError("unknown ring descriptor '" + std::string(text) + "' (expected Z, Q or Z/<n>)");
}

std::string RingDesc::to_string() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
  }
  return "?";
}

Scalar RingDesc::zero() const { return Scalar(*this, 0L); }
Scalar RingDesc::one() const { return Scalar(*this, 1L); }
Scalar RingDesc::from_int(long value) const { return Scalar(*this, value); }

Scalar RingDesc::parse_scalar(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(*this, mpq_class(parse_integer(text)));
  if (kind_ != RingKind::Rationals) {
    throw InputError("fraction '" + std::string(text) + "' is not an element of " + to_string());
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Scalar(*this, mpq_class(num, den));
}

std::vector<Scalar> RingDesc::elements() const {
  if (!is_finite()) throw InputError("ring " + to_string() + " is infinite");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(modulus_));
  for (std::int64_t v = 0; v < modulus_; ++v) out.emplace_back(*this, static_cast<long>(v));
  return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const RingDesc& ring, const mpq_class& value) : ring_(ring), value_(value) {
  value_.canonicalize();
  normalize();
}

Scalar::Scalar(const RingDesc& ring, long value) : ring_(ring), value_(value) { normalize(); }

void Scalar::normalize() {
  switch (ring_.kind()) {
    case RingKind::Rationals:
      break;
    case RingKind::Integers:
      if (value_.get_den() != 1) {
        throw InputError("non-integral value " + value_.get_str() + " in Z");
      }
      break;
    case RingKind::IntegersMod: {
      if (value_.get_den() != 1) {
        throw InputError("non-integral value " + value_.get_str() + " in " + ring_.to_string());
      }
      mpz_class& num = value_.get_num();
      mpz_fdiv_r_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(ring_.modulus()));
      break;
    }
  }
}

void Scalar::require_same_ring(const Scalar& other) const {
  if (!(ring_ == other.ring_)) {
    throw InputError("ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
  }
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -out.value_;
  out.normalize();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_ring(rhs);
  if (ring_.kind() == RingKind::Rationals) {
    value_ += rhs.value_;
  } else {
    value_.get_num() += rhs.value_.get_num();
    if (ring_.is_finite()) normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_ring(rhs);
  if (ring_.kind() == RingKind::Rationals) {
    value_ -= rhs.value_;
  } else {
    value_.get_num() -= rhs.value_.get_num();
    if (ring_.is_finite()) normalize();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_ring(rhs);
  if (ring_.kind() == RingKind::Rationals) {
    value_ *= rhs.value_;
  } else {
    value_.get_num() *= rhs.value_.get_num();
    if (ring_.is_finite()) normalize();
  }
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_unit(const Scalar& x) {
  switch (x.ring().kind()) {
    case RingKind::Rationals:
      return !x.is_zero();
    case RingKind::Integers:
      return x.value() == 1 || x.value() == -1;
    case RingKind::IntegersMod: {
      mpz_class g;
      mpz_class n(static_cast<long>(x.ring().modulus()));
      mpz_gcd(g.get_mpz_t(), x.value().get_num_mpz_t(), n.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar scalar_inv(const Scalar& x) {
  if (!is_unit(x)) {
    throw NotAUnit(x.to_string() + " is not a unit of " + x.ring().to_string());
  }
  switch (x.ring().kind()) {
    case RingKind::Rationals:
      return Scalar(x.ring(), mpq_class(1) / x.value());
    case RingKind::Integers:
      return x;
    case RingKind::IntegersMod: {
      mpz_class inv;
      mpz_class n(static_cast<long>(x.ring().modulus()));
      mpz_invert(inv.get_mpz_t(), x.value().get_num_mpz_t(), n.get_mpz_t());
      return Scalar(x.ring(), mpq_class(inv));
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {
  if (rank < 0 || rank > kMaxRank) {
    throw InputError("group rank " + std::to_string(rank) + " outside [0, " +
                     std::to_string(kMaxRank) + "]");
  }
  if (rank < 32 && (bits >> rank) != 0) {
    throw InputError("group element bits exceed rank " + std::to_string(rank));
  }
}

GroupElement GroupElement::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxRank)) {
    throw InputError("group label '" + std::string(text) + "' is too long");
  }
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1') {
      bits |= (1u << j);
    } else if (text[j] != '0') {
      throw InputError("group label '" + std::string(text) + "' is not a bitstring");
    }
  }
  return GroupElement(static_cast<int>(text.size()), bits);
}

std::string GroupElement::to_string() const {
  std::string out(static_cast<std::size_t>(rank_), '0');
  for (int j = 0; j < rank_; ++j) {
    if (bits_ & (1u << j)) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) {
    throw InputError("group rank mismatch: " + std::to_string(a.rank()) + " vs " +
                     std::to_string(b.rank()));
  }
  return GroupElement(a.rank(), a.bits() ^ b.bits());
}

std::size_t group_order(int rank) { return std::size_t{1} << rank; }

std::vector<GroupElement> all_elements(int rank) {
  std::vector<GroupElement> out;
  std::size_t order = group_order(rank);
  out.reserve(order);
  for (std::size_t i = 0; i < order; ++i) out.emplace_back(rank, static_cast<std::uint32_t>(i));
  return out;
}

}  // namespace hqft
