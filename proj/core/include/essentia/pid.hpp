#pragma once

// Coefficient rings: the integers and F_p[x], behind one element type.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "essentia/errors.hpp"

namespace essentia {

struct Ring {
  enum class Kind : std::uint8_t { Int, PolyModP };

  Kind kind = Kind::Int;
  std::uint32_t p = 0;  // characteristic for PolyModP, 0 for Int

  static Ring integers() { return Ring{}; }
  /// Throws DomainError unless p is a prime below 2^31.
  static Ring polymod(std::uint32_t p);

  bool is_int() const { return kind == Kind::Int; }
  /// "int" or "polymod:p".
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// An element of Z or F_p[x]. Polynomial coefficients are stored lowest
/// degree first, reduced into [0, p), with trailing zeros stripped.
class Element {
 public:
  Element() = default;  // the integer 0
  Element(long value) : int_(value) {}  // NOLINT: integers read naturally
  explicit Element(mpz_class value) : int_(std::move(value)) {}

  static Element integer(const mpz_class& value) { return Element(value); }
  /// Coefficients may be any signed values; they are reduced mod p.
  static Element poly(std::uint32_t p, const std::vector<long long>& coeffs);
  static Element zero(Ring ring);
  static Element one(Ring ring);
  /// The constant c (reduced mod p for polynomial rings).
  static Element constant(Ring ring, long c);
  /// The monomial x; DomainError over Z.
  static Element variable(Ring ring);

  Ring ring() const { return ring_; }
  bool is_zero() const;
  bool is_unit() const;
  bool is_one() const;

  const mpz_class& as_int() const;
  const std::vector<std::uint32_t>& coeffs() const;
  /// Polynomial degree (-1 for zero). DomainError over Z.
  int degree() const;

  std::string to_string() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  Ring ring_{};
  mpz_class int_{};
  std::vector<std::uint32_t> poly_{};

  void strip();
};

struct DivMod {
  Element quotient;
  Element remainder;
};

/// Euclidean division a = q*b + r. Over Z the remainder lies in [0, |b|);
/// over F_p[x], deg r < deg b. DomainError on b = 0 or mixed rings.
DivMod divmod(const Element& a, const Element& b);
/// Canonical residue of a modulo b (the divmod remainder).
Element mod(const Element& a, const Element& b);
/// a / b where b | a; DomainError otherwise.
Element exact_div(const Element& a, const Element& b);
/// Whether a divides b. Zero divides only zero.
bool divides(const Element& a, const Element& b);

/// Euclidean size comparison: |a| vs |b| over Z, degree over F_p[x].
std::strong_ordering compare_size(const Element& a, const Element& b);
/// Total order used for deterministic sorting: size first, then payload.
std::strong_ordering canonical_compare(const Element& a, const Element& b);

/// Unit-normal associate: non-negative over Z, monic over F_p[x].
Element normalize(const Element& a);
/// The unit u with a = u * normalize(a) (one for zero).
Element unit_part(const Element& a);
/// Inverse of a unit; DomainError for non-units.
Element unit_inverse(const Element& u);

Element pow(const Element& base, unsigned exponent);

struct ExtGcd {
  Element g;
  Element x;
  Element y;
};

/// g = a*x + b*y with g the unit-normal gcd. DomainError when both inputs
/// are zero or the rings differ.
ExtGcd ext_gcd(const Element& a, const Element& b);
/// Unit-normal gcd; gcd(0, 0) = 0.
Element gcd(const Element& a, const Element& b);
/// Unit-normal lcm; lcm with zero is zero.
Element lcm(const Element& a, const Element& b);

struct Factorization {
  Element unit;
  std::vector<std::pair<Element, unsigned>> factors;

  /// unit * prod prime^exponent.
  Element expand() const;
};

/// Trial-division factorization. DomainError for zero, CapacityError past
/// |a| <= 2^63 (Z) or deg a <= 12 with at most 2^24 candidates (F_p[x]).
Factorization factor(const Element& a);
bool is_squarefree(const Element& a);
/// Irreducibility test; units and zero are not prime.
bool is_prime(const Element& a);
/// Multiplicity of the prime p in a (a non-zero).
unsigned valuation(const Element& a, const Element& p);

/// |R / <a>|: |a| over Z, p^deg a over F_p[x]. CapacityError when it does
/// not fit in 64 bits, DomainError for a = 0.
std::uint64_t residue_count(const Element& a);

/// The smallest prime of the ring: 2 over Z, x over F_p[x].
Element smallest_prime(Ring ring);

/// Parses "-12" or "poly(p; c0,c1,...,ck)". A bare integer in a polynomial
/// ring becomes a constant. DomainError on malformed text or ring mismatch.
Element parse_element(std::string_view text, Ring ring);
/// Parses either syntax, taking the ring from the text.
Element parse_element(std::string_view text);

}  // namespace essentia
