#include "essentia/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "essentia/errors.hpp"

namespace essentia::oracle {

// ---------------------------------------------------------------------------
// ElementSet

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::meets_nontrivially(const ElementSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k] & other.words_[k];
    if (k == 0) w &= ~std::uint64_t{1};
    if (w) return true;
  }
  return false;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(n_);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
  return out;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.words_ < b.words_;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// FiniteStructure

namespace {

void require_small(const FGModule& m) {
  if (!m.is_finite()) throw CapacityError("oracle needs a finite module, got " + m.to_string());
  if (m.order() > kMaxOrder)
    throw CapacityError("oracle enumerates modules of order at most " + std::to_string(kMaxOrder) + ", got " +
                        std::to_string(m.order()));
}

// r * u on codes, r given by its coefficients (lowest first) or as an integer.
std::uint64_t apply(const TorsionCodec& codec, std::uint64_t u, const Element& r) {
  if (r.ring().is_int()) {
    const mpz_class k = r.as_int() % mpz_class(static_cast<unsigned long>(codec.size()));
    mpz_class pos = k < 0 ? k + mpz_class(static_cast<unsigned long>(codec.size())) : k;
    return codec.scale_int(u, pos.get_ui());
  }
  std::uint64_t out = 0, power = u;
  const auto& c = r.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out = codec.add(out, codec.scale_int(power, c[k]));
    if (k + 1 < c.size()) power = codec.mul_x(power);
  }
  return out;
}

}  // namespace

FiniteStructure FiniteStructure::from_module(const FGModule& m) {
  require_small(m);
  const TorsionCodec codec(m);
  FiniteStructure s;
  s.n_ = static_cast<std::size_t>(m.order());
  s.table_.resize(s.n_ * s.n_);
  for (std::size_t u = 0; u < s.n_; ++u)
    for (std::size_t v = 0; v < s.n_; ++v) s.table_[u * s.n_ + v] = static_cast<std::uint32_t>(codec.add(u, v));
  if (codec.has_variable()) {
    std::vector<std::uint32_t> x(s.n_);
    for (std::size_t u = 0; u < s.n_; ++u) x[u] = static_cast<std::uint32_t>(codec.mul_x(u));
    s.actions_.push_back(std::move(x));
  }
  return s;
}

FiniteStructure FiniteStructure::over_annihilator_quotient(const FGModule& m) {
  FiniteStructure s = from_module(m);
  s.actions_.clear();
  if (m.is_zero()) return s;
  const TorsionCodec codec(m);
  const Element& top = m.factors().back();
  std::vector<Element> residues;
  if (m.ring().is_int()) {
    const unsigned long a = top.as_int().get_ui();
    for (unsigned long k = 0; k < a; ++k) residues.push_back(Element::integer(mpz_class(k)));
  } else {
    // every polynomial of degree < deg(top)
    const std::uint32_t p = m.ring().p;
    const int d = top.degree();
    std::uint64_t count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<long long> coeffs;
      std::uint64_t x = idx;
      for (int k = 0; k < d; ++k) {
        coeffs.push_back(static_cast<long long>(x % p));
        x /= p;
      }
      residues.push_back(Element::poly(p, coeffs));
    }
  }
  for (const auto& r : residues) {
    std::vector<std::uint32_t> act(s.n_);
    for (std::size_t u = 0; u < s.n_; ++u) act[u] = static_cast<std::uint32_t>(apply(codec, u, r));
    s.actions_.push_back(std::move(act));
  }
  return s;
}

ElementSet FiniteStructure::closure(const std::vector<std::uint32_t>& seeds) const {
  ElementSet out(n_);
  out.insert(0);
  std::vector<std::uint32_t> order{0};
  std::vector<std::uint32_t> gens;
  for (auto g : seeds)
    if (g != 0) gens.push_back(g);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t u = order[head];
    auto visit = [&](std::uint32_t t) {
      if (!out.contains(t)) {
        out.insert(t);
        order.push_back(t);
      }
    };
    for (auto g : gens) visit(add(u, g));
    for (const auto& act : actions_) visit(act[u]);
  }
  return out;
}

ElementSet FiniteStructure::sum(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(n_);
  const auto ma = a.members(), mb = b.members();
  for (auto u : ma)
    for (auto v : mb) out.insert(add(u, v));
  return out;
}

FiniteStructure FiniteStructure::quotient(const ElementSet& n, std::vector<std::uint32_t>& coset_of) const {
  const auto kernel = n.members();
  coset_of.assign(n_, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t u = 0; u < n_; ++u) {
    if (coset_of[u] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(reps.size());
    reps.push_back(u);
    for (auto k : kernel) coset_of[add(u, k)] = idx;
  }
  FiniteStructure q;
  q.n_ = reps.size();
  q.table_.resize(q.n_ * q.n_);
  for (std::size_t a = 0; a < q.n_; ++a)
    for (std::size_t b = 0; b < q.n_; ++b) q.table_[a * q.n_ + b] = coset_of[add(reps[a], reps[b])];
  for (const auto& act : actions_) {
    std::vector<std::uint32_t> qa(q.n_);
    for (std::size_t a = 0; a < q.n_; ++a) qa[a] = coset_of[act[reps[a]]];
    q.actions_.push_back(std::move(qa));
  }
  return q;
}

FiniteStructure FiniteStructure::restrict_to(const ElementSet& sub, std::vector<std::uint32_t>& old_index) const {
  old_index = sub.members();
  std::vector<std::uint32_t> new_index(n_, UINT32_MAX);
  for (std::size_t i = 0; i < old_index.size(); ++i) new_index[old_index[i]] = static_cast<std::uint32_t>(i);
  FiniteStructure r;
  r.n_ = old_index.size();
  r.table_.resize(r.n_ * r.n_);
  for (std::size_t a = 0; a < r.n_; ++a)
    for (std::size_t b = 0; b < r.n_; ++b) r.table_[a * r.n_ + b] = new_index[add(old_index[a], old_index[b])];
  for (const auto& act : actions_) {
    std::vector<std::uint32_t> ra(r.n_);
    for (std::size_t a = 0; a < r.n_; ++a) ra[a] = new_index[act[old_index[a]]];
    r.actions_.push_back(std::move(ra));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Lattice

std::optional<std::size_t> SubmoduleLattice::index_of(const ElementSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

ElementSet SubmoduleLattice::socle() const {
  ElementSet acc = members_.front();
  for (std::size_t i = 0; i < size(); ++i)
    if (flags_[i].simple && !members_[i].subset_of(acc)) acc = structure_.sum(acc, members_[i]);
  return acc;
}

bool SubmoduleLattice::is_direct_sum_of_simples() const {
  ElementSet acc = members_.front();
  for (std::size_t i = 0; i < size(); ++i)
    if (flags_[i].simple && !acc.meets_nontrivially(members_[i])) acc = structure_.sum(acc, members_[i]);
  return acc == members_.back();
}

SubmoduleLattice enumerate_submodules(FiniteStructure s) {
  const std::size_t n = s.size();
  struct Seed {
    std::uint32_t generator;
    ElementSet set;
  };
  std::vector<Seed> seeds;
  std::unordered_set<ElementSet, ElementSetHash> seen_seeds;
  for (std::uint32_t u = 1; u < n; ++u) {
    ElementSet c = s.closure({u});
    if (seen_seeds.insert(c).second) seeds.push_back({u, std::move(c)});
  }

  std::vector<ElementSet> members;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet zero(n);
  zero.insert(0);
  members.push_back(zero);
  seen.insert(zero);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& seed : seeds) {
      if (members[head].contains(seed.generator)) continue;
      ElementSet joined = s.sum(members[head], seed.set);
      if (seen.insert(joined).second) {
        members.push_back(std::move(joined));
        if (members.size() > kMaxLatticeSize)
          throw CapacityError("submodule lattice exceeds " + std::to_string(kMaxLatticeSize) + " members");
      }
    }
  }
  std::sort(members.begin(), members.end());

  const std::size_t total = members.size();
  std::vector<std::size_t> counts(total);
  for (std::size_t i = 0; i < total; ++i) counts[i] = members[i].count();
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_count;
  for (std::size_t i = 0; i < total; ++i) by_count[counts[i]].push_back(i);

  std::vector<LatticeFlags> flags(total);
  for (std::size_t i = 0; i < total; ++i) {
    const ElementSet& a = members[i];
    LatticeFlags& f = flags[i];
    if (i != 0) {
      f.essential_incl_top = true;
      for (std::size_t j = 1; j < total && f.essential_incl_top; ++j)
        if (!a.meets_nontrivially(members[j])) f.essential_incl_top = false;
      f.simple = true;
      for (std::size_t j = 1; j < total && counts[j] < counts[i] && f.simple; ++j)
        if (members[j].subset_of(a)) f.simple = false;
    }
    f.proper_essential = f.essential_incl_top && i != 0 && i + 1 != total;
    if (n % counts[i] == 0) {
      auto it = by_count.find(n / counts[i]);
      if (it != by_count.end())
        for (std::size_t j : it->second)
          if (!a.meets_nontrivially(members[j])) {
            f.direct_summand = true;
            break;
          }
    }
  }

  SubmoduleLattice lattice;
  lattice.structure_ = std::move(s);
  lattice.members_ = std::move(members);
  lattice.flags_ = std::move(flags);
  return lattice;
}

SubmoduleLattice enumerate_submodules(const FGModule& m) { return enumerate_submodules(FiniteStructure::from_module(m)); }

Submodule to_submodule(const FGModule& m, const ElementSet& s) {
  std::vector<ModuleElement> elems;
  for (auto u : s.members()) elems.push_back(m.torsion_element(u));
  return Submodule::from_element_set(m, elems);
}

ElementSet to_element_set(const Submodule& sub) {
  ElementSet out(static_cast<std::size_t>(sub.module().order()));
  for (auto c : sub.torsion_codes()) out.insert(static_cast<std::size_t>(c));
  return out;
}

std::vector<Submodule> proper_essentials(const FGModule& m) {
  const SubmoduleLattice lattice = enumerate_submodules(m);
  std::vector<Submodule> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.flags(i).proper_essential) out.push_back(to_submodule(m, lattice.member(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

Report verify_baba(const FGModule& m, const SubmoduleLattice& lattice) {
  bool all_summands = true, no_proper_essential = true;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    all_summands = all_summands && lattice.flags(i).direct_summand;
    no_proper_essential = no_proper_essential && !lattice.flags(i).proper_essential;
  }
  const bool sum_of_simples = lattice.is_direct_sum_of_simples();
  const bool socle_is_top = lattice.socle() == lattice.member(lattice.top_index());
  const bool agree = all_summands == no_proper_essential && no_proper_essential == sum_of_simples &&
                     sum_of_simples == socle_is_top;
  return {m.to_string(),
          {{"semisimple_equivalences", agree,
            std::string("all summands: ") + yn(all_summands) + ", no proper essential: " + yn(no_proper_essential) +
                ", direct sum of simples: " + yn(sum_of_simples) + ", socle is M: " + yn(socle_is_top)}}};
}

Report verify_baba(const FGModule& m) { return verify_baba(m, enumerate_submodules(m)); }

Report verify_babama(const FGModule& m, const SubmoduleLattice& lattice) {
  ElementSet meet = lattice.member(lattice.top_index());
  std::size_t essentials = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.flags(i).essential_incl_top) {
      meet = meet & lattice.member(i);
      ++essentials;
    }
  const ElementSet soc = lattice.socle();
  return {m.to_string(),
          {{"socle_is_meet_of_essentials", meet == soc,
            std::to_string(essentials) + " essential submodules, meet has " + std::to_string(meet.count()) +
                " elements, socle has " + std::to_string(soc.count())}}};
}

Report verify_babama(const FGModule& m) { return verify_babama(m, enumerate_submodules(m)); }

Report verify_gmkj(const FGModule& m, const Submodule& n, const SubmoduleLattice& lattice) {
  if (!(n.module() == m)) throw DomainError("submodule belongs to " + n.module().to_string());
  const ElementSet nset = to_element_set(n);
  const auto n_index = lattice.index_of(nset);
  if (!n_index) throw DomainError("element set is not a submodule of " + m.to_string());
  if (*n_index == lattice.zero_index() || *n_index == lattice.top_index())
    throw DomainError("quotient check needs 0 != N != M");

  std::vector<std::uint32_t> coset_of;
  const SubmoduleLattice q = enumerate_submodules(lattice.structure().quotient(nset, coset_of));
  bool forward = true;
  std::size_t quotient_pe = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q.flags(i).proper_essential) continue;
    ++quotient_pe;
    ElementSet pre(lattice.structure().size());
    for (std::uint32_t u = 0; u < coset_of.size(); ++u)
      if (q.member(i).contains(coset_of[u])) pre.insert(u);
    const auto idx = lattice.index_of(pre);
    if (!idx || !lattice.flags(*idx).proper_essential) forward = false;
  }
  bool module_pe = false;
  for (std::size_t i = 0; i < lattice.size(); ++i) module_pe = module_pe || lattice.flags(i).proper_essential;
  return {m.to_string(),
          {{"quotient_essentials_lift", forward,
            "N has " + std::to_string(nset.count()) + " elements; M/N has " + std::to_string(quotient_pe) +
                " proper essential submodules; M has one: " + yn(module_pe)}}};
}

Report verify_gmkj(const FGModule& m, const Submodule& n) { return verify_gmkj(m, n, enumerate_submodules(m)); }

Report verify_gmkj_converse_counterexample() {
  const FGModule m(Ring::integers(), 0, {Element(4)});
  const SubmoduleLattice lattice = enumerate_submodules(m);
  ElementSet n(4);
  n.insert(0);
  n.insert(2);
  std::vector<std::uint32_t> coset_of;
  const SubmoduleLattice q = enumerate_submodules(lattice.structure().quotient(n, coset_of));
  bool quotient_pe = false, module_pe = false;
  for (std::size_t i = 0; i < q.size(); ++i) quotient_pe = quotient_pe || q.flags(i).proper_essential;
  for (std::size_t i = 0; i < lattice.size(); ++i) module_pe = module_pe || lattice.flags(i).proper_essential;
  return {m.to_string(),
          {{"quotient_converse_fails", !quotient_pe && module_pe,
            std::string("N = {0,2}; M/N has a proper essential: ") + yn(quotient_pe) + ", M has one: " + yn(module_pe)}}};
}

Report verify_sm(const FGModule& m, const SubmoduleLattice& lattice) {
  bool every_contains_simple = true;
  for (std::size_t i = 1; i < lattice.size() && every_contains_simple; ++i) {
    bool found = false;
    for (std::size_t j = 1; j <= i && !found; ++j)
      found = lattice.flags(j).simple && lattice.member(j).subset_of(lattice.member(i));
    every_contains_simple = found;
  }
  const auto soc = lattice.index_of(lattice.socle());
  const bool socle_pe = soc && lattice.flags(*soc).proper_essential;
  const bool semisimple = lattice.is_direct_sum_of_simples();
  return {m.to_string(),
          {{"nonzero_submodules_contain_simples", every_contains_simple, ""},
           {"socle_essential_iff_not_semisimple", socle_pe == !semisimple,
            std::string("socle proper essential: ") + yn(socle_pe) + ", semisimple: " + yn(semisimple)}}};
}

Report verify_sm(const FGModule& m) { return verify_sm(m, enumerate_submodules(m)); }

Report verify_ram(const FGModule& m, const SubmoduleLattice& lattice) {
  const SubmoduleLattice over_quotient = enumerate_submodules(FiniteStructure::over_annihilator_quotient(m));
  bool same = over_quotient.size() == lattice.size();
  for (std::size_t i = 0; same && i < lattice.size(); ++i) same = over_quotient.member(i) == lattice.member(i);
  return {m.to_string(),
          {{"annihilator_quotient_lattice", same,
            std::to_string(lattice.size()) + " submodules over R, " + std::to_string(over_quotient.size()) +
                " over R/Ann(M)"}}};
}

Report verify_lattice_closure(const FGModule& m, const SubmoduleLattice& lattice, std::size_t max_members) {
  if (lattice.size() > max_members)
    return {m.to_string(), {{"lattice_closed", true, "skipped: " + std::to_string(lattice.size()) + " members"}}};
  bool closed = true;
  for (std::size_t i = 0; i < lattice.size() && closed; ++i)
    for (std::size_t j = i + 1; j < lattice.size() && closed; ++j) {
      const ElementSet& a = lattice.member(i);
      const ElementSet& b = lattice.member(j);
      closed = lattice.index_of(a & b).has_value() && lattice.index_of(lattice.structure().sum(a, b)).has_value();
    }
  return {m.to_string(), {{"lattice_closed", closed, std::to_string(lattice.size()) + " members"}}};
}

ElementSet primary_component(const FGModule& m, const Element& p) {
  require_small(m);
  const TorsionCodec codec(m);
  const std::size_t n = static_cast<std::size_t>(m.order());
  ElementSet out(n);
  for (std::size_t u = 0; u < n; ++u) {
    // p-power torsion iff some p^k kills u with p^k bounded by |M|
    std::uint64_t v = u;
    for (std::size_t k = 0; k <= 64 && v != 0; ++k) v = apply(codec, v, p);
    if (v == 0) out.insert(u);
  }
  return out;
}

bool annihilator_chain_grows(const FGModule& m, const Element& p) {
  require_small(m);
  const TorsionCodec codec(m);
  const std::size_t n = static_cast<std::size_t>(m.order());
  // sizes of Ann_M(p^k) for k = 1, 2, ... until stable
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> cur(n);
  for (std::size_t u = 0; u < n; ++u) cur[u] = u;
  for (std::size_t k = 1; k <= 64; ++k) {
    std::size_t killed = 0;
    for (std::size_t u = 0; u < n; ++u) {
      cur[u] = apply(codec, cur[u], p);
      if (cur[u] == 0) ++killed;
    }
    sizes.push_back(killed);
    if (k >= 2 && sizes[k - 1] == sizes[k - 2]) break;
  }
  return sizes.size() >= 2 && sizes.back() > sizes.front();
}

}  // namespace essentia::oracle
