#include "essentia/fgmod.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "essentia/smith.hpp"

namespace essentia {

struct FGModule::Data {
  Ring ring;
  std::size_t betti = 0;
  std::vector<Element> factors;
};

namespace {

void require_same_parent(const FGModule& a, const FGModule& b) {
  if (!(a == b)) throw DomainError("elements belong to different modules");
}

std::string ring_symbol(Ring ring) {
  return ring.is_int() ? std::string("Z") : "F" + std::to_string(ring.p) + "[x]";
}

}  // namespace

FGModule::FGModule() : data_(std::make_shared<const Data>()) {}

FGModule::FGModule(Ring ring, std::size_t betti, std::vector<Element> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Element& f = factors[i];
    if (!(f.ring() == ring)) throw DomainError("invariant factor " + f.to_string() + " is outside " + ring.name());
    if (f.is_zero() || f.is_unit())
      throw DomainError("invariant factor " + f.to_string() + " must be a non-zero non-unit");
    if (!(normalize(f) == f)) throw DomainError("invariant factor " + f.to_string() + " is not unit-normal");
    if (i > 0 && !divides(factors[i - 1], f))
      throw DomainError("invariant factors " + factors[i - 1].to_string() + ", " + f.to_string() +
                        " break the divisibility chain");
  }
  data_ = std::make_shared<const Data>(Data{ring, betti, std::move(factors)});
}

FGModule FGModule::from_cyclic_orders(Ring ring, std::size_t betti, std::span<const Element> orders) {
  std::vector<Element> diag;
  for (const Element& o : orders) {
    if (!(o.ring() == ring)) throw DomainError("cyclic order " + o.to_string() + " is outside " + ring.name());
    if (o.is_zero()) {
      ++betti;
    } else if (!o.is_unit()) {
      diag.push_back(normalize(o));
    }
  }
  if (diag.empty()) return FGModule(ring, betti, {});
  const SmithDecomposition d = smith_normal_form(Matrix::diagonal(ring, diag));
  std::vector<Element> factors;
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (!d.diagonal(i, i).is_unit()) factors.push_back(d.diagonal(i, i));
  return FGModule(ring, betti, std::move(factors));
}

FGModule FGModule::free_module(Ring ring, std::size_t rank) { return FGModule(ring, rank, {}); }

Ring FGModule::ring() const { return data_->ring; }
std::size_t FGModule::betti() const { return data_->betti; }
const std::vector<Element>& FGModule::factors() const { return data_->factors; }

std::uint64_t FGModule::torsion_order() const {
  std::uint64_t n = 1;
  for (const Element& a : factors()) {
    const std::uint64_t r = residue_count(a);
    if (n > (std::uint64_t{1} << 63) / r) throw CapacityError("torsion part of " + to_string() + " exceeds 2^63 elements");
    n *= r;
  }
  return n;
}

std::uint64_t FGModule::order() const {
  if (!is_finite()) throw DomainError(to_string() + " is infinite");
  return torsion_order();
}

ModuleElement FGModule::zero_element() const {
  return ModuleElement(*this, std::vector<Element>(betti(), Element::zero(ring())),
                       std::vector<Element>(factors().size(), Element::zero(ring())));
}

ModuleElement FGModule::element(std::vector<Element> free, std::vector<Element> torsion) const {
  if (free.size() != betti() || torsion.size() != factors().size())
    throw DomainError("element shape does not match " + to_string());
  for (const auto& e : free)
    if (!(e.ring() == ring())) throw DomainError("coordinate outside " + ring().name());
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (!(torsion[i].ring() == ring())) throw DomainError("coordinate outside " + ring().name());
    torsion[i] = mod(torsion[i], factors()[i]);
  }
  return ModuleElement(*this, std::move(free), std::move(torsion));
}

ModuleElement FGModule::generator(std::size_t k) const {
  if (k >= coordinate_count()) throw DomainError("coordinate index out of range");
  ModuleElement e = zero_element();
  if (k < betti()) {
    e.free_[k] = Element::one(ring());
  } else {
    e.torsion_[k - betti()] = Element::one(ring());
  }
  return e;
}

std::uint64_t FGModule::encode_torsion(std::span<const Element> torsion) const {
  if (torsion.size() != factors().size()) throw DomainError("torsion shape does not match " + to_string());
  std::uint64_t code = 0, stride = 1;
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    const Element r = mod(torsion[i], factors()[i]);
    std::uint64_t digit = 0;
    if (ring().is_int()) {
      digit = r.as_int().get_ui();
    } else {
      const auto& c = r.coeffs();
      for (std::size_t k = c.size(); k-- > 0;) digit = digit * ring().p + c[k];
    }
    code += digit * stride;
    stride *= residue_count(factors()[i]);
  }
  return code;
}

std::vector<Element> FGModule::decode_torsion(std::uint64_t code) const {
  std::vector<Element> out;
  out.reserve(factors().size());
  for (const Element& a : factors()) {
    const std::uint64_t radix = residue_count(a);
    std::uint64_t digit = code % radix;
    code /= radix;
    if (ring().is_int()) {
      out.emplace_back(mpz_class(static_cast<unsigned long>(digit)));
    } else {
      std::vector<long long> c;
      for (int k = 0; k < a.degree(); ++k) {
        c.push_back(static_cast<long long>(digit % ring().p));
        digit /= ring().p;
      }
      out.push_back(Element::poly(ring().p, c));
    }
  }
  return out;
}

ModuleElement FGModule::torsion_element(std::uint64_t code) const {
  return ModuleElement(*this, std::vector<Element>(betti(), Element::zero(ring())), decode_torsion(code));
}

std::string FGModule::to_string() const {
  const std::string r = ring_symbol(ring());
  std::vector<std::string> parts;
  if (betti() > 0) parts.push_back(r + "^" + std::to_string(betti()));
  for (const Element& a : factors()) parts.push_back(r + "/" + (ring().is_int() ? a.to_string() : "(" + a.to_string() + ")"));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

bool operator==(const FGModule& a, const FGModule& b) {
  if (a.data_ == b.data_) return true;
  return a.ring() == b.ring() && a.betti() == b.betti() && a.factors() == b.factors();
}

FGModule direct_sum(const FGModule& a, const FGModule& b) {
  if (!(a.ring() == b.ring())) throw DomainError("direct sum over mixed rings");
  std::vector<Element> orders = a.factors();
  orders.insert(orders.end(), b.factors().begin(), b.factors().end());
  return FGModule::from_cyclic_orders(a.ring(), a.betti() + b.betti(), orders);
}

bool ModuleElement::is_zero() const {
  return std::all_of(free_.begin(), free_.end(), [](const Element& e) { return e.is_zero(); }) &&
         std::all_of(torsion_.begin(), torsion_.end(), [](const Element& e) { return e.is_zero(); });
}

bool ModuleElement::is_torsion() const {
  return std::all_of(free_.begin(), free_.end(), [](const Element& e) { return e.is_zero(); });
}

std::string ModuleElement::to_string() const {
  auto join = [](const std::vector<Element>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out;
  };
  if (free_.empty()) return "(" + join(torsion_) + ")";
  return "(" + join(free_) + " | " + join(torsion_) + ")";
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.module_ == b.module_ && a.free_ == b.free_ && a.torsion_ == b.torsion_;
}

ModuleElement element_add(const ModuleElement& x, const ModuleElement& y) {
  require_same_parent(x.module(), y.module());
  std::vector<Element> free(x.free().size()), torsion(x.torsion().size());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = x.free()[i] + y.free()[i];
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = x.torsion()[i] + y.torsion()[i];
  return x.module().element(std::move(free), std::move(torsion));
}

ModuleElement element_scale(const ModuleElement& x, const Element& r) {
  if (!(r.ring() == x.module().ring())) throw DomainError("scalar outside " + x.module().ring().name());
  std::vector<Element> free(x.free().size()), torsion(x.torsion().size());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = r * x.free()[i];
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = r * x.torsion()[i];
  return x.module().element(std::move(free), std::move(torsion));
}

ModuleElement element_neg(const ModuleElement& x) {
  return element_scale(x, Element::constant(x.module().ring(), -1));
}

Element annihilator(const ModuleElement& m) {
  const Ring ring = m.module().ring();
  if (!m.is_torsion()) return Element::zero(ring);
  Element ann = Element::one(ring);
  const auto& factors = m.module().factors();
  for (std::size_t i = 0; i < factors.size(); ++i)
    ann = lcm(ann, exact_div(factors[i], gcd(factors[i], m.torsion()[i])));
  return ann;
}

// ---------------------------------------------------------------------------
// TorsionCodec

TorsionCodec::TorsionCodec(const FGModule& m) : ring_(m.ring()) {
  size_ = m.torsion_order();
  std::uint64_t stride = 1;
  for (const Element& a : m.factors()) {
    Coordinate c{residue_count(a), stride, 0, {}};
    if (!ring_.is_int()) {
      c.degree = a.degree();
      c.modulus = a.coeffs();
    }
    coords_.push_back(std::move(c));
    stride *= coords_.back().radix;
  }
}

std::uint64_t TorsionCodec::add(std::uint64_t u, std::uint64_t v) const {
  std::uint64_t out = 0;
  for (const Coordinate& c : coords_) {
    const std::uint64_t a = digit(u, c), b = digit(v, c);
    std::uint64_t d;
    if (ring_.is_int()) {
      d = (a + b) % c.radix;
    } else {
      d = 0;
      std::uint64_t x = a, y = b, place = 1;
      for (int k = 0; k < c.degree; ++k) {
        d += (x % ring_.p + y % ring_.p) % ring_.p * place;
        x /= ring_.p;
        y /= ring_.p;
        place *= ring_.p;
      }
    }
    out += d * c.stride;
  }
  return out;
}

std::uint64_t TorsionCodec::neg(std::uint64_t u) const {
  if (!ring_.is_int()) return scale_int(u, ring_.p - 1);
  std::uint64_t out = 0;
  for (const Coordinate& c : coords_) out += (c.radix - digit(u, c)) % c.radix * c.stride;
  return out;
}

std::uint64_t TorsionCodec::scale_int(std::uint64_t u, std::uint64_t k) const {
  std::uint64_t out = 0;
  for (const Coordinate& c : coords_) {
    const std::uint64_t a = digit(u, c);
    std::uint64_t d;
    if (ring_.is_int()) {
      d = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * (k % c.radix) % c.radix);
    } else {
      d = 0;
      std::uint64_t x = a, place = 1;
      for (int j = 0; j < c.degree; ++j) {
        d += (x % ring_.p) * (k % ring_.p) % ring_.p * place;
        x /= ring_.p;
        place *= ring_.p;
      }
    }
    out += d * c.stride;
  }
  return out;
}

std::uint64_t TorsionCodec::mul_x(std::uint64_t u) const {
  if (ring_.is_int()) throw DomainError("the integers have no variable x");
  const std::uint64_t p = ring_.p;
  std::uint64_t out = 0;
  for (const Coordinate& c : coords_) {
    std::vector<std::uint64_t> coef(static_cast<std::size_t>(c.degree) + 1, 0);
    std::uint64_t x = digit(u, c);
    for (int k = 0; k < c.degree; ++k) {
      coef[k + 1] = x % p;
      x /= p;
    }
    const std::uint64_t top = coef[c.degree];
    std::uint64_t d = 0, place = 1;
    for (int k = 0; k < c.degree; ++k) {
      const std::uint64_t sub = top * c.modulus[k] % p;
      d += (coef[k] + p - sub) % p * place;
      place *= p;
    }
    out += d * c.stride;
  }
  return out;
}

std::optional<std::vector<std::uint64_t>> TorsionCodec::closure(std::span<const std::uint64_t> seeds,
                                                                std::uint64_t cap) const {
  std::vector<std::uint64_t> gens;
  for (std::uint64_t s : seeds)
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint64_t s = order[head];
    auto visit = [&](std::uint64_t t) {
      if (seen.insert(t).second) order.push_back(t);
    };
    for (std::uint64_t g : gens) visit(add(s, g));
    if (has_variable()) visit(mul_x(s));
    if (order.size() > cap) return std::nullopt;
  }
  std::sort(order.begin(), order.end());
  return order;
}

// ---------------------------------------------------------------------------
// Submodules

Submodule generate(const FGModule& m, std::span<const ModuleElement> gens, bool require_enumeration) {
  Submodule sub;
  sub.module_ = m;
  sub.generators_.assign(gens.begin(), gens.end());
  for (const auto& g : gens) require_same_parent(g.module(), m);

  const Ring ring = m.ring();
  const std::size_t b = m.betti();
  std::vector<std::uint64_t> seeds;
  std::vector<ModuleElement> torsion_gens;
  if (b == 0) {
    sub.free_basis_ = Matrix(ring, 0, 0);
    torsion_gens = sub.generators_;
  } else {
    Matrix free_parts(ring, gens.size(), b);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t k = 0; k < b; ++k) free_parts(j, k) = gens[j].free()[k];
    const EchelonForm ech = hermite_normal_form(free_parts);
    sub.free_basis_ = ech.basis.row_block(0, ech.rank);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ModuleElement combo = m.zero_element();
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (!ech.transform(i, j).is_zero()) combo = combo + ech.transform(i, j) * gens[j];
      if (i < ech.rank) {
        sub.free_lifts_.push_back(std::move(combo));
      } else {
        torsion_gens.push_back(std::move(combo));
      }
    }
  }

  std::optional<std::vector<std::uint64_t>> codes;
  try {
    const TorsionCodec codec(m);
    for (const auto& g : torsion_gens) seeds.push_back(g.torsion_code());
    codes = codec.closure(seeds, kEnumerationCap);
  } catch (const CapacityError&) {
    if (require_enumeration) throw;
  }
  if (!codes && require_enumeration)
    throw CapacityError("submodule of " + m.to_string() + " exceeds the " + std::to_string(kEnumerationCap) +
                        "-element enumeration cap");
  sub.torsion_codes_ = std::move(codes);
  return sub;
}

const std::vector<std::uint64_t>& Submodule::torsion_codes() const {
  if (!torsion_codes_)
    throw CapacityError("submodule element set exceeds the " + std::to_string(kEnumerationCap) + "-element cap");
  return *torsion_codes_;
}

std::uint64_t Submodule::size() const {
  if (!module_.is_finite()) throw DomainError("submodule of an infinite module has no finite size");
  return torsion_codes().size();
}

std::vector<ModuleElement> Submodule::elements() const {
  if (!module_.is_finite()) throw DomainError("cannot list the elements of an infinite module");
  std::vector<ModuleElement> out;
  for (std::uint64_t c : torsion_codes()) out.push_back(module_.torsion_element(c));
  return out;
}

bool Submodule::contains(const ModuleElement& x) const {
  require_same_parent(x.module(), module_);
  ModuleElement rest = x;
  const Ring ring = module_.ring();
  for (std::size_t r = 0; r < free_basis_.rows(); ++r) {
    std::size_t pivot = 0;
    while (free_basis_(r, pivot).is_zero()) ++pivot;
    const auto [q, rem] = divmod(rest.free()[pivot], free_basis_(r, pivot));
    if (!rem.is_zero()) return false;
    if (!q.is_zero()) rest = rest + (Element::zero(ring) - q) * free_lifts_[r];
  }
  if (!rest.is_torsion()) return false;
  const auto& codes = torsion_codes();
  return std::binary_search(codes.begin(), codes.end(), rest.torsion_code());
}

bool Submodule::is_zero() const {
  if (free_basis_.rows() != 0) return false;
  return torsion_codes_ && torsion_codes_->size() == 1;
}

bool Submodule::is_whole() const {
  if (free_basis_.rows() != module_.betti()) return false;
  if (module_.betti() > 0 && !(free_basis_ == Matrix::identity(module_.ring(), module_.betti()))) return false;
  return torsion_codes().size() == module_.torsion_order();
}

bool Submodule::is_closed() const {
  const auto& codes = torsion_codes();
  if (codes.empty() || codes.front() != 0) return false;
  const TorsionCodec codec(module_);
  auto member = [&](std::uint64_t c) { return std::binary_search(codes.begin(), codes.end(), c); };
  for (std::uint64_t u : codes) {
    if (codec.has_variable() && !member(codec.mul_x(u))) return false;
    for (std::uint64_t v : codes)
      if (v >= u && !member(codec.add(u, v))) return false;
  }
  return true;
}

Submodule Submodule::from_element_set(const FGModule& m, std::span<const ModuleElement> elements) {
  if (!m.is_finite()) throw DomainError("element sets describe submodules of finite modules only");
  Submodule sub;
  sub.module_ = m;
  sub.generators_.assign(elements.begin(), elements.end());
  sub.free_basis_ = Matrix(m.ring(), 0, 0);
  std::vector<std::uint64_t> codes;
  for (const auto& e : elements) {
    require_same_parent(e.module(), m);
    codes.push_back(e.torsion_code());
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  if (codes.size() > kEnumerationCap) throw CapacityError("element set exceeds the enumeration cap");
  sub.torsion_codes_ = std::move(codes);
  return sub;
}

bool operator==(const Submodule& a, const Submodule& b) {
  return a.module_ == b.module_ && a.free_basis_ == b.free_basis_ && a.torsion_codes() == b.torsion_codes();
}

Submodule cyclic(const ModuleElement& m) {
  if (!m.is_torsion()) throw CapacityError("cyclic submodule of " + m.to_string() + " is infinite");
  const ModuleElement gens[] = {m};
  return generate(m.module(), gens, true);
}

Submodule span(const FGModule& m, std::span<const ModuleElement> gens) {
  for (const auto& g : gens)
    if (!g.is_torsion()) throw CapacityError("span of " + g.to_string() + " is infinite");
  return generate(m, gens, true);
}

Submodule mixed_span(const FGModule& m, std::span<const ModuleElement> gens) { return generate(m, gens, false); }

Submodule zero_submodule(const FGModule& m) { return generate(m, {}, false); }

Submodule whole_module(const FGModule& m) {
  std::vector<ModuleElement> gens;
  for (std::size_t k = 0; k < m.coordinate_count(); ++k) gens.push_back(m.generator(k));
  return generate(m, gens, false);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  require_same_parent(a.module(), b.module());
  if (!a.module().is_finite()) throw DomainError("intersection is implemented for finite modules");
  std::vector<std::uint64_t> codes;
  std::set_intersection(a.torsion_codes().begin(), a.torsion_codes().end(), b.torsion_codes().begin(),
                        b.torsion_codes().end(), std::back_inserter(codes));
  std::vector<ModuleElement> elems;
  for (std::uint64_t c : codes) elems.push_back(a.module().torsion_element(c));
  return Submodule::from_element_set(a.module(), elems);
}

Socle socle(const FGModule& m) {
  std::vector<ModuleElement> gens;
  std::vector<std::pair<Element, std::size_t>> counts;
  const auto& factors = m.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& [p, e] : factor(factors[i]).factors) {
      gens.push_back(exact_div(factors[i], p) * m.generator(m.betti() + i));
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& pc) { return pc.first == p; });
      if (it == counts.end()) {
        counts.emplace_back(p, 1);
      } else {
        ++it->second;
      }
    }
  }
  std::sort(counts.begin(), counts.end(),
            [](const auto& x, const auto& y) { return canonical_compare(x.first, y.first) < 0; });
  return {generate(m, gens, false), std::move(counts)};
}

bool is_semisimple(const FGModule& m) {
  if (m.betti() > 0) return false;
  return std::all_of(m.factors().begin(), m.factors().end(), [](const Element& a) { return is_squarefree(a); });
}

Submodule primary_part(const FGModule& m, const Element& p, std::optional<unsigned> k) {
  if (m.betti() > 0) throw DomainError("primary parts are defined here for torsion modules only");
  if (!(p.ring() == m.ring()) || !is_prime(p)) throw DomainError(p.to_string() + " is not a prime of " + m.ring().name());
  if (k && *k == 0) throw DomainError("primary_part needs a positive exponent");
  const Element prime = normalize(p);
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < m.factors().size(); ++i) {
    const Element& a = m.factors()[i];
    const unsigned v = valuation(a, prime);
    const unsigned use = k ? std::min(*k, v) : v;
    gens.push_back(exact_div(a, pow(prime, use)) * m.generator(i));
  }
  return generate(m, gens, false);
}

TorsionPart torsion_part(const FGModule& m) {
  TorsionPart t{FGModule(m.ring(), 0, m.factors()), {}};
  for (std::size_t i = 0; i < m.factors().size(); ++i) t.embedding.push_back(m.betti() + i);
  return t;
}

}  // namespace essentia
