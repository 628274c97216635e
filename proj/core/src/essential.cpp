#include "essentia/essential.hpp"

#include <algorithm>
#include <vector>

namespace essentia {

std::string EssentialReason::to_string() const {
  switch (kind) {
    case ReasonKind::BettiPositive:
      return "BettiPositive";
    case ReasonKind::NonSquarefreeFactor:
      return "NonSquarefreeFactor(" + std::to_string(index) + ", " + prime->to_string() + ", " +
             std::to_string(exponent) + ")";
    case ReasonKind::None:
      break;
  }
  return "None";
}

namespace {

EssentialReason find_reason(const FGModule& m) {
  if (m.betti() > 0) return {ReasonKind::BettiPositive, 0, std::nullopt, 0};
  for (std::size_t i = 0; i < m.factors().size(); ++i)
    for (const auto& [p, e] : factor(m.factors()[i]).factors)
      if (e >= 2) return {ReasonKind::NonSquarefreeFactor, i, p, e};
  return {};
}

EssentialWitness build_witness(const FGModule& m, const EssentialReason& reason) {
  WitnessCertificate cert;
  std::size_t replaced = 0;  // coordinate index in M
  if (reason.kind == ReasonKind::BettiPositive) {
    cert = {WitnessCertificate::Component::Free, 0, smallest_prime(m.ring())};
    replaced = 0;
  } else {
    cert = {WitnessCertificate::Component::Torsion, reason.index, *reason.prime};
    replaced = m.betti() + reason.index;
  }
  std::vector<ModuleElement> gens;
  for (std::size_t k = 0; k < m.coordinate_count(); ++k)
    gens.push_back(k == replaced ? cert.ideal_generator * m.generator(k) : m.generator(k));
  return {mixed_span(m, gens), cert};
}

}  // namespace

EssentialVerdict has_proper_essential(const FGModule& m) {
  EssentialVerdict v;
  v.reason = find_reason(m);
  v.exists = v.reason.kind != ReasonKind::None;
  if (v.exists) v.witness = build_witness(m, v.reason);
  return v;
}

EssentialWitness essential_witness(const FGModule& m) {
  const EssentialReason reason = find_reason(m);
  if (reason.kind == ReasonKind::None)
    throw PreconditionError(m.to_string() + " is semisimple and has no proper essential submodule");
  return build_witness(m, reason);
}

bool is_proper_essential(const FGModule& m, const Submodule& e) {
  if (!m.is_finite()) throw CapacityError("element sweep needs a finite module, got " + m.to_string());
  const std::uint64_t n = m.order();
  if (n > kEnumerationCap)
    throw CapacityError("element sweep over " + std::to_string(n) + " elements exceeds the cap of " +
                        std::to_string(kEnumerationCap));
  if (!(e.module() == m)) throw DomainError("submodule belongs to " + e.module().to_string());
  if (!e.is_closed()) throw DomainError("element set is not closed under the module operations");
  const auto& members = e.torsion_codes();
  if (members.size() == 1 || members.size() == n) return false;

  const TorsionCodec codec(m);
  auto in_e = [&](std::uint64_t c) { return std::binary_search(members.begin(), members.end(), c); };
  for (std::uint64_t c = 1; c < n; ++c) {
    if (in_e(c)) continue;
    const std::uint64_t seed[] = {c};
    const auto orbit = codec.closure(seed, n);
    const bool meets = std::any_of(orbit->begin(), orbit->end(), [&](std::uint64_t u) { return u != 0 && in_e(u); });
    if (!meets) return false;
  }
  return true;
}

bool primary_criterion(const FGModule& m, const Element& p) {
  if (m.betti() > 0) throw DomainError("primary_criterion needs a torsion module, got " + m.to_string());
  if (!(p.ring() == m.ring()) || !is_prime(p)) throw DomainError(p.to_string() + " is not a prime of " + m.ring().name());
  const Element square = pow(normalize(p), 2);
  return std::any_of(m.factors().begin(), m.factors().end(), [&](const Element& a) { return divides(square, a); });
}

bool is_socle_essential(const FGModule& m) {
  if (m.betti() > 0) return false;
  return !is_semisimple(m);
}

}  // namespace essentia
