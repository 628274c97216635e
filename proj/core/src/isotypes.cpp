#include "essentia/isotypes.hpp"

#include <algorithm>

#include "essentia/errors.hpp"

namespace essentia {

namespace {

constexpr std::uint64_t kMaxTypeOrder = std::uint64_t{1} << 20;

std::uint64_t norm(const Element& p) {
  if (p.ring().is_int()) return p.as_int().get_ui();
  std::uint64_t n = 1;
  for (int k = 0; k < p.degree(); ++k) n *= p.ring().p;
  return n;
}

// Partitions of e as non-increasing part lists.
void partitions(unsigned e, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

struct Choice {
  Element prime;
  std::vector<unsigned> parts;
};

void build(const std::vector<Element>& primes, const std::vector<std::uint64_t>& norms, std::size_t next,
           std::uint64_t budget, std::vector<Choice>& chosen, std::vector<FGModule>& out, Ring ring) {
  // norms ascend, so once one prime is too large all later ones are
  if (next == primes.size() || norms[next] > budget) {
    std::size_t length = 0;
    for (const auto& c : chosen) length = std::max(length, c.parts.size());
    // the largest factor collects the largest part of every prime
    std::vector<Element> factors(length, Element::one(ring));
    for (const auto& c : chosen)
      for (std::size_t k = 0; k < c.parts.size(); ++k)
        factors[length - 1 - k] = factors[length - 1 - k] * pow(c.prime, c.parts[k]);
    out.emplace_back(ring, 0, std::move(factors));
    return;
  }
  build(primes, norms, next + 1, budget, chosen, out, ring);
  std::uint64_t power = norms[next];
  for (unsigned e = 1; power <= budget; ++e) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    for (auto& lambda : parts) {
      chosen.push_back({primes[next], std::move(lambda)});
      build(primes, norms, next + 1, budget / power, chosen, out, ring);
      chosen.pop_back();
    }
    if (power > budget / norms[next]) break;
    power *= norms[next];
  }
}

}  // namespace

std::vector<Element> primes_up_to_norm(Ring ring, std::uint64_t max_norm) {
  std::vector<Element> out;
  if (ring.is_int()) {
    for (std::uint64_t n = 2; n <= max_norm; ++n) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
      if (prime) out.push_back(Element::integer(mpz_class(static_cast<unsigned long>(n))));
    }
    return out;
  }
  const std::uint32_t p = ring.p;
  std::uint64_t size = p;
  for (int d = 1; size <= max_norm; ++d) {
    // monic polynomials of degree d, enumerated by their lower coefficients
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      std::vector<long long> coeffs;
      std::uint64_t x = idx;
      for (int k = 0; k < d; ++k) {
        coeffs.push_back(static_cast<long long>(x % p));
        x /= p;
      }
      coeffs.push_back(1);
      Element f = Element::poly(p, coeffs);
      if (is_prime(f)) out.push_back(std::move(f));
    }
    if (size > max_norm / p) break;
    size *= p;
  }
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) { return canonical_compare(a, b) < 0; });
  return out;
}

std::vector<FGModule> isomorphism_types(Ring ring, std::uint64_t max_order) {
  if (max_order > kMaxTypeOrder)
    throw CapacityError("isomorphism types are enumerated up to order " + std::to_string(kMaxTypeOrder));
  std::vector<FGModule> out;
  if (max_order == 0) return out;
  const std::vector<Element> primes = primes_up_to_norm(ring, max_order);
  std::vector<std::uint64_t> norms;
  for (const auto& p : primes) norms.push_back(norm(p));
  std::vector<Choice> chosen;
  build(primes, norms, 0, max_order, chosen, out, ring);
  std::sort(out.begin(), out.end(), [](const FGModule& a, const FGModule& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(), [](const Element& x, const Element& y) {
      return canonical_compare(x, y) < 0;
    });
  });
  return out;
}

}  // namespace essentia
