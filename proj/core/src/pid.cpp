#include "essentia/pid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace essentia {
namespace {

using Coeffs = std::vector<std::uint32_t>;

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0 mod p: a^(p-2).
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring()))
    throw DomainError("mixed rings: " + a.ring().name() + " and " + b.ring().name());
}

int poly_deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void poly_strip(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Polynomial long division over F_p; b non-zero.
std::pair<Coeffs, Coeffs> poly_divmod(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  Coeffs r = a;
  if (poly_deg(a) < poly_deg(b)) return {Coeffs{}, r};
  const std::uint32_t lead_inv = invmod(b.back(), p);
  const int db = poly_deg(b);
  Coeffs q(a.size() - b.size() + 1, 0);
  for (int k = poly_deg(r); k >= db; --k) {
    const std::uint32_t c = mulmod(r[k], lead_inv, p);
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      const std::uint32_t sub = mulmod(c, b[j], p);
      r[k - db + j] = (r[k - db + j] + p - sub) % p;
    }
  }
  poly_strip(q);
  poly_strip(r);
  return {q, r};
}

}  // namespace

Ring Ring::polymod(std::uint32_t p) {
  if (p >= (1u << 31) || !is_small_prime(p))
    throw DomainError("polymod characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Ring{Kind::PolyModP, p};
}

std::string Ring::name() const {
  return is_int() ? std::string("int") : "polymod:" + std::to_string(p);
}

Element Element::poly(std::uint32_t p, const std::vector<long long>& coeffs) {
  Element e;
  e.ring_ = Ring::polymod(p);
  e.poly_.reserve(coeffs.size());
  for (long long c : coeffs) {
    long long r = c % static_cast<long long>(p);
    if (r < 0) r += p;
    e.poly_.push_back(static_cast<std::uint32_t>(r));
  }
  e.strip();
  return e;
}

Element Element::zero(Ring ring) {
  Element e;
  e.ring_ = ring;
  return e;
}

Element Element::one(Ring ring) { return constant(ring, 1); }

Element Element::constant(Ring ring, long c) {
  if (ring.is_int()) return Element(c);
  return poly(ring.p, {c});
}

Element Element::variable(Ring ring) {
  if (ring.is_int()) throw DomainError("the integers have no variable x");
  return poly(ring.p, {0, 1});
}

void Element::strip() { poly_strip(poly_); }

bool Element::is_zero() const { return ring_.is_int() ? int_ == 0 : poly_.empty(); }

bool Element::is_unit() const {
  if (ring_.is_int()) return int_ == 1 || int_ == -1;
  return poly_.size() == 1;
}

bool Element::is_one() const {
  if (ring_.is_int()) return int_ == 1;
  return poly_.size() == 1 && poly_[0] == 1;
}

const mpz_class& Element::as_int() const {
  if (!ring_.is_int()) throw DomainError("element of " + ring_.name() + " is not an integer");
  return int_;
}

const std::vector<std::uint32_t>& Element::coeffs() const {
  if (ring_.is_int()) throw DomainError("integer has no polynomial coefficients");
  return poly_;
}

int Element::degree() const { return poly_deg(coeffs()); }

std::string Element::to_string() const {
  if (ring_.is_int()) return int_.get_str();
  std::ostringstream out;
  out << "poly(" << ring_.p << ";";
  if (poly_.empty()) out << " 0";
  for (std::size_t i = 0; i < poly_.size(); ++i) out << (i ? "," : " ") << poly_[i];
  out << ")";
  return out.str();
}

Element Element::operator-() const {
  Element r = *this;
  if (ring_.is_int()) {
    r.int_ = -int_;
  } else {
    for (auto& c : r.poly_) c = c == 0 ? 0 : ring_.p - c;
  }
  return r;
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element r = Element::zero(a.ring_);
  if (a.ring_.is_int()) {
    r.int_ = a.int_ + b.int_;
    return r;
  }
  const std::uint32_t p = a.ring_.p;
  r.poly_.assign(std::max(a.poly_.size(), b.poly_.size()), 0);
  for (std::size_t i = 0; i < r.poly_.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.poly_.size()) s += a.poly_[i];
    if (i < b.poly_.size()) s += b.poly_[i];
    r.poly_[i] = static_cast<std::uint32_t>(s % p);
  }
  r.strip();
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element r = Element::zero(a.ring_);
  if (a.ring_.is_int()) {
    r.int_ = a.int_ * b.int_;
    return r;
  }
  if (a.poly_.empty() || b.poly_.empty()) return r;
  const std::uint32_t p = a.ring_.p;
  r.poly_.assign(a.poly_.size() + b.poly_.size() - 1, 0);
  for (std::size_t i = 0; i < a.poly_.size(); ++i) {
    if (a.poly_[i] == 0) continue;
    for (std::size_t j = 0; j < b.poly_.size(); ++j)
      r.poly_[i + j] = (r.poly_[i + j] + mulmod(a.poly_[i], b.poly_[j], p)) % p;
  }
  r.strip();
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.ring_ == b.ring_)) return false;
  return a.ring_.is_int() ? a.int_ == b.int_ : a.poly_ == b.poly_;
}

DivMod divmod(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw DomainError("division by zero");
  const Ring ring = a.ring();
  if (ring.is_int()) {
    mpz_class q, r;
    // Floor division toward a non-negative remainder in [0, |b|).
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
    if (r < 0) {  // only when b < 0
      r -= b.as_int();
      q += 1;
    }
    return {Element(q), Element(r)};
  }
  auto [q, r] = poly_divmod(a.coeffs(), b.coeffs(), ring.p);
  std::vector<long long> qq(q.begin(), q.end()), rr(r.begin(), r.end());
  return {Element::poly(ring.p, qq), Element::poly(ring.p, rr)};
}

Element mod(const Element& a, const Element& b) { return divmod(a, b).remainder; }

Element exact_div(const Element& a, const Element& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError(b.to_string() + " does not divide " + a.to_string());
  return q;
}

bool divides(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return b.is_zero();
  return mod(b, a).is_zero();
}

std::strong_ordering compare_size(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.ring().is_int()) {
    const int c = mpz_cmpabs(a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.degree() <=> b.degree();
}

std::strong_ordering canonical_compare(const Element& a, const Element& b) {
  if (auto c = compare_size(a, b); c != 0) return c;
  if (a.ring().is_int()) {
    const int c = cmp(a.as_int(), b.as_int());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t k = ca.size(); k-- > 0;)
    if (ca[k] != cb[k]) return ca[k] <=> cb[k];
  return std::strong_ordering::equal;
}

Element unit_part(const Element& a) {
  const Ring ring = a.ring();
  if (a.is_zero()) return Element::one(ring);
  if (ring.is_int()) return Element(a.as_int() < 0 ? -1L : 1L);
  return Element::constant(ring, a.coeffs().back());
}

Element unit_inverse(const Element& u) {
  if (!u.is_unit()) throw DomainError(u.to_string() + " is not a unit");
  if (u.ring().is_int()) return u;
  return Element::constant(u.ring(), invmod(u.coeffs()[0], u.ring().p));
}

Element normalize(const Element& a) { return a * unit_inverse(unit_part(a)); }

Element pow(const Element& base, unsigned exponent) {
  Element result = Element::one(base.ring());
  Element b = base;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1u) result *= b;
    if (exponent > 1) b *= b;
  }
  return result;
}

ExtGcd ext_gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) throw DomainError("ext_gcd(0, 0) is undefined");
  const Ring ring = a.ring();
  // Invariants: r0 = a*s0 + b*t0, r1 = a*s1 + b*t1.
  Element r0 = a, r1 = b;
  Element s0 = Element::one(ring), s1 = Element::zero(ring);
  Element t0 = Element::zero(ring), t1 = Element::one(ring);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Element inv = unit_inverse(unit_part(r0));
  return {r0 * inv, s0 * inv, t0 * inv};
}

Element gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero() && b.is_zero()) return Element::zero(a.ring());
  if (a.ring().is_int()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.as_int().get_mpz_t(), b.as_int().get_mpz_t());
    return Element(g);
  }
  return ext_gcd(a, b).g;
}

Element lcm(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Element::zero(a.ring());
  return normalize(exact_div(a * b, gcd(a, b)));
}

Element Factorization::expand() const {
  Element r = unit;
  for (const auto& [prime, e] : factors) r *= pow(prime, e);
  return r;
}

namespace {

Factorization factor_int(const Element& a) {
  mpz_class n = abs(a.as_int());
  const mpz_class bound = mpz_class(1) << 63;
  if (n > bound) throw CapacityError("factor: |a| exceeds 2^63 (" + a.to_string() + ")");
  Factorization f{unit_part(a), {}};
  std::uint64_t m = n.get_ui();
  auto take = [&](std::uint64_t d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e) f.factors.emplace_back(Element(mpz_class(static_cast<unsigned long>(d))), e);
  };
  take(2);
  for (std::uint64_t d = 3; static_cast<unsigned __int128>(d) * d <= m; d += 2) take(d);
  if (m > 1) f.factors.emplace_back(Element(mpz_class(static_cast<unsigned long>(m))), 1u);
  return f;
}

Factorization factor_poly(const Element& a) {
  const Ring ring = a.ring();
  const std::uint32_t p = ring.p;
  const int deg = a.degree();
  if (deg > 12) throw CapacityError("factor: degree exceeds 12 (" + a.to_string() + ")");
  long double candidates = 1;
  for (int i = 0; i < deg / 2; ++i) candidates *= p;
  if (candidates > static_cast<long double>(1u << 24))
    throw CapacityError("factor: trial division over F_" + std::to_string(p) + " in degree " +
                        std::to_string(deg) + " exceeds 2^24 candidates");
  Factorization f{unit_part(a), {}};
  Element rest = normalize(a);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    // Every monic polynomial of degree d, coefficients as a base-p counter.
    std::vector<long long> digits(static_cast<std::size_t>(d) + 1, 0);
    digits[d] = 1;
    while (true) {
      const Element q = Element::poly(p, digits);
      unsigned e = 0;
      while (true) {
        auto [quot, rem] = divmod(rest, q);
        if (!rem.is_zero()) break;
        rest = quot;
        ++e;
      }
      if (e) f.factors.emplace_back(q, e);
      if (2 * d > rest.degree()) break;
      std::size_t k = 0;
      while (k < static_cast<std::size_t>(d) && ++digits[k] == static_cast<long long>(p)) digits[k++] = 0;
      if (k == static_cast<std::size_t>(d)) break;
    }
  }
  if (rest.degree() >= 1) f.factors.emplace_back(rest, 1u);
  return f;
}

}  // namespace

Factorization factor(const Element& a) {
  if (a.is_zero()) throw DomainError("factor: zero has no factorization");
  Factorization f = a.ring().is_int() ? factor_int(a) : factor_poly(a);
  std::sort(f.factors.begin(), f.factors.end(), [](const auto& x, const auto& y) {
    return canonical_compare(x.first, y.first) < 0;
  });
  return f;
}

bool is_squarefree(const Element& a) {
  const Factorization f = factor(a);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const auto& pe) { return pe.second == 1; });
}

bool is_prime(const Element& a) {
  if (a.is_zero() || a.is_unit()) return false;
  const Factorization f = factor(a);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

unsigned valuation(const Element& a, const Element& p) {
  if (a.is_zero()) throw DomainError("valuation of zero");
  if (p.is_zero() || p.is_unit()) throw DomainError("valuation needs a non-unit non-zero base");
  unsigned v = 0;
  Element rest = a;
  while (true) {
    auto [q, r] = divmod(rest, p);
    if (!r.is_zero()) return v;
    rest = q;
    ++v;
  }
}

std::uint64_t residue_count(const Element& a) {
  if (a.is_zero()) throw DomainError("R/<0> is infinite");
  if (a.ring().is_int()) {
    const mpz_class n = abs(a.as_int());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) throw CapacityError("|R/<a>| exceeds 2^63");
    return n.get_ui();
  }
  std::uint64_t n = 1;
  for (int i = 0; i < a.degree(); ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / a.ring().p)
      throw CapacityError("|R/<a>| exceeds 2^64");
    n *= a.ring().p;
  }
  return n;
}

Element smallest_prime(Ring ring) {
  return ring.is_int() ? Element(2L) : Element::variable(ring);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

long long parse_ll(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("malformed number in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Element parse_element(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.rfind("poly(", 0) == 0) {
    if (s.back() != ')') throw DomainError("malformed polynomial '" + std::string(text) + "'");
    const std::string_view body = s.substr(5, s.size() - 6);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw DomainError("malformed polynomial '" + std::string(text) + "'");
    const long long p = parse_ll(body.substr(0, semi), text);
    if (p < 2 || p >= (1LL << 31)) throw DomainError("bad characteristic in '" + std::string(text) + "'");
    std::vector<long long> coeffs;
    std::string_view rest = body.substr(semi + 1);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_ll(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return Element::poly(static_cast<std::uint32_t>(p), coeffs);
  }
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  if (!is_decimal(digits)) throw DomainError("malformed element '" + std::string(text) + "'");
  return Element(mpz_class(digits, 10));
}

Element parse_element(std::string_view text, Ring ring) {
  Element e = parse_element(text);
  if (e.ring() == ring) return e;
  if (e.ring().is_int() && !ring.is_int()) {
    const mpz_class r = e.as_int() % static_cast<unsigned long>(ring.p);
    return Element::constant(ring, r.get_si());
  }
  throw DomainError("element '" + std::string(text) + "' is not in " + ring.name());
}

}  // namespace essentia
