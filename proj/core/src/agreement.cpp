#include "essentia/agreement.hpp"

#include <random>
#include <string>

#include "essentia/essential.hpp"
#include "essentia/oracle.hpp"

namespace essentia {

namespace {

using oracle::ElementSet;
using oracle::SubmoduleLattice;

const char* yn(bool b) { return b ? "yes" : "no"; }

bool lattice_has_proper_essential(const SubmoduleLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.flags(i).proper_essential) return true;
  return false;
}

// The prime divisors of |M|: the distinct primes of the top factor.
std::vector<Element> primes_of(const FGModule& m) {
  std::vector<Element> out;
  if (m.factors().empty()) return out;
  for (const auto& [p, e] : factor(m.factors().back()).factors) out.push_back(p);
  return out;
}

}  // namespace

Report check_module(const FGModule& m, std::uint64_t seed) {
  const SubmoduleLattice lattice = oracle::enumerate_submodules(m);
  Report report;
  report.module = m.to_string();

  const EssentialVerdict verdict = has_proper_essential(m);
  const bool oracle_pe = lattice_has_proper_essential(lattice);
  report.checks.push_back({"criterion_matches_oracle", verdict.exists == oracle_pe,
                           std::string("criterion: ") + yn(verdict.exists) + " (" + verdict.reason.to_string() +
                               "), oracle: " + yn(oracle_pe)});

  if (verdict.witness) {
    const Submodule& w = verdict.witness->submodule;
    const bool sweep = is_proper_essential(m, w);
    const auto idx = lattice.index_of(oracle::to_element_set(w));
    const bool flagged = idx && lattice.flags(*idx).proper_essential;
    report.checks.push_back({"witness_is_proper_essential", sweep && flagged,
                             "element sweep: " + std::string(yn(sweep)) + ", lattice flag: " + yn(flagged)});
  }

  report.append(oracle::verify_baba(m, lattice));
  report.append(oracle::verify_babama(m, lattice));
  report.append(oracle::verify_sm(m, lattice));

  const bool socle_ess = is_socle_essential(m);
  const auto soc_idx = lattice.index_of(lattice.socle());
  const bool oracle_socle_ess = soc_idx && lattice.flags(*soc_idx).proper_essential;
  report.checks.push_back({"socle_essential_matches_oracle", socle_ess == oracle_socle_ess,
                           std::string("criterion: ") + yn(socle_ess) + ", oracle: " + yn(oracle_socle_ess)});

  const ElementSet soc_fast = oracle::to_element_set(socle(m).submodule);
  report.checks.push_back({"socle_matches_oracle", soc_fast == lattice.socle(),
                           std::to_string(soc_fast.count()) + " vs " + std::to_string(lattice.socle().count()) +
                               " elements"});
  report.checks.push_back({"semisimple_matches_oracle", is_semisimple(m) == lattice.is_direct_sum_of_simples(), ""});

  for (const Element& p : primes_of(m)) {
    const bool fast = primary_criterion(m, p);
    const Element square = p * p;
    bool divides_factor = false;
    for (const auto& a : m.factors()) divides_factor = divides_factor || divides(square, a);
    const bool chain = oracle::annihilator_chain_grows(m, p);
    const ElementSet component = oracle::primary_component(m, p);
    bool component_pe = false;
    if (component.count() == lattice.structure().size()) {
      component_pe = oracle_pe;
    } else {
      std::vector<std::uint32_t> old_index;
      component_pe = lattice_has_proper_essential(
          oracle::enumerate_submodules(lattice.structure().restrict_to(component, old_index)));
    }
    const bool agree = fast == divides_factor && fast == chain && fast == component_pe;
    report.checks.push_back({"primary_criterion_" + p.to_string(), agree,
                             std::string("criterion: ") + yn(fast) + ", p^2 divides a factor: " + yn(divides_factor) +
                                 ", annihilator chain grows: " + yn(chain) +
                                 ", primary part has proper essential: " + yn(component_pe)});
  }

  if (lattice.size() > 2) {
    std::mt19937_64 rng(seed);
    const std::size_t pick = 1 + static_cast<std::size_t>(rng() % (lattice.size() - 2));
    report.append(oracle::verify_gmkj(m, oracle::to_submodule(m, lattice.member(pick)), lattice));
  }

  report.append(oracle::verify_ram(m, lattice));
  report.append(oracle::verify_lattice_closure(m, lattice));
  return report;
}

}  // namespace essentia
