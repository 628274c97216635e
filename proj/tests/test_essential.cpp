#include <gtest/gtest.h>

#include "essentia/essential.hpp"
#include "essentia/isotypes.hpp"
#include "support/naive.hpp"

using namespace essentia;

namespace {

const Ring Z = Ring::integers();

FGModule zmod(std::vector<long> factors, std::size_t betti = 0) {
  return FGModule(Z, betti, std::vector<Element>(factors.begin(), factors.end()));
}

std::vector<unsigned> orders_of(const FGModule& m) {
  std::vector<unsigned> out;
  for (const auto& a : m.factors()) out.push_back(static_cast<unsigned>(a.as_int().get_ui()));
  return out;
}

std::uint32_t mask_of(const Submodule& s) {
  std::uint32_t mask = 0;
  for (auto c : s.torsion_codes()) mask |= std::uint32_t{1} << c;
  return mask;
}

}  // namespace

TEST(Verdict, Examples) {
  const auto v4 = has_proper_essential(zmod({4}));
  EXPECT_TRUE(v4.exists);
  EXPECT_EQ(v4.reason.kind, ReasonKind::NonSquarefreeFactor);
  EXPECT_EQ(v4.reason.index, 0u);
  EXPECT_EQ(*v4.reason.prime, Element(2));
  EXPECT_EQ(v4.reason.exponent, 2u);
  EXPECT_EQ(v4.reason.to_string(), "NonSquarefreeFactor(0, 2, 2)");

  const auto v6 = has_proper_essential(zmod({6}));
  EXPECT_FALSE(v6.exists);
  EXPECT_EQ(v6.reason.kind, ReasonKind::None);
  EXPECT_FALSE(v6.witness.has_value());

  const auto vf = has_proper_essential(zmod({}, 2));
  EXPECT_TRUE(vf.exists);
  EXPECT_EQ(vf.reason.kind, ReasonKind::BettiPositive);
}

TEST(Verdict, BettiBeatsFactorsAndFirstFactorWins) {
  EXPECT_EQ(has_proper_essential(zmod({4}, 1)).reason.kind, ReasonKind::BettiPositive);
  const auto v = has_proper_essential(zmod({3, 18, 36}));
  EXPECT_EQ(v.reason.index, 1u);
  EXPECT_EQ(*v.reason.prime, Element(3));
  const auto w = has_proper_essential(zmod({2, 12}));
  EXPECT_EQ(w.reason.index, 1u);
  EXPECT_EQ(*w.reason.prime, Element(2));
}

TEST(Witness, Examples) {
  const Submodule w4 = essential_witness(zmod({4})).submodule;
  EXPECT_EQ(w4.torsion_codes(), (std::vector<std::uint64_t>{0, 2}));

  const FGModule z = zmod({}, 1);
  const EssentialWitness wz = essential_witness(z);
  EXPECT_EQ(wz.submodule.free_basis()(0, 0), Element(2));
  EXPECT_EQ(wz.certificate.component, WitnessCertificate::Component::Free);
  EXPECT_EQ(wz.certificate.ideal_generator, Element(2));

  const FGModule m = zmod({2, 4});
  const Submodule w = essential_witness(m).submodule;
  EXPECT_EQ(w.size(), 4u);
  EXPECT_TRUE(is_proper_essential(m, w));

  EXPECT_THROW(essential_witness(zmod({6})), PreconditionError);
}

TEST(Witness, MixedModuleKeepsOtherComponents) {
  const FGModule m = zmod({2, 4}, 2);
  const EssentialWitness w = essential_witness(m);
  const Submodule& s = w.submodule;
  EXPECT_TRUE(s.contains(Element(2) * m.generator(0)));
  EXPECT_FALSE(s.contains(m.generator(0)));
  EXPECT_TRUE(s.contains(m.generator(1)));
  EXPECT_TRUE(s.contains(m.generator(2)));
  EXPECT_TRUE(s.contains(m.generator(3)));
  EXPECT_EQ(s.torsion_codes().size(), 8u);
}

TEST(Witness, PolynomialFreeUsesX) {
  const Ring F3 = Ring::polymod(3);
  const FGModule m(F3, 1, {});
  const EssentialWitness w = essential_witness(m);
  EXPECT_EQ(w.certificate.ideal_generator, Element::variable(F3));
}

TEST(ElementSweep, Examples) {
  const FGModule z4 = zmod({4});
  EXPECT_TRUE(is_proper_essential(z4, cyclic(z4.torsion_element(2))));
  const FGModule v = zmod({2, 2});
  EXPECT_FALSE(is_proper_essential(v, cyclic(v.torsion_element(3))));
  EXPECT_FALSE(is_proper_essential(z4, whole_module(z4)));
  EXPECT_FALSE(is_proper_essential(z4, zero_submodule(z4)));
}

TEST(ElementSweep, Errors) {
  const FGModule z4 = zmod({4});
  const ModuleElement bad[] = {z4.torsion_element(0), z4.torsion_element(1)};
  EXPECT_THROW(is_proper_essential(z4, Submodule::from_element_set(z4, bad)), DomainError);
  EXPECT_THROW(is_proper_essential(zmod({8}), cyclic(z4.torsion_element(2))), DomainError);
  EXPECT_THROW(is_proper_essential(zmod({}, 1), zero_submodule(zmod({}, 1))), CapacityError);
  EXPECT_THROW(is_proper_essential(zmod({8192}), zero_submodule(zmod({8192}))), CapacityError);
}

// Every subset of a group of order <= 16 tested for closure and essentiality.
TEST(ElementSweep, MatchesSubsetSearch) {
  for (const auto& type : isomorphism_types(Z, 16)) {
    const testing_support::NaiveGroup g(orders_of(type));
    const auto expected = g.proper_essentials();
    EXPECT_EQ(has_proper_essential(type).exists, !expected.empty()) << type.to_string();
    for (auto mask : g.subgroups()) {
      std::vector<ModuleElement> elems;
      for (unsigned u = 0; u < g.size(); ++u)
        if (mask >> u & 1u) elems.push_back(type.torsion_element(u));
      const Submodule s = span(type, elems);
      EXPECT_EQ(mask_of(s), mask);
      EXPECT_EQ(is_proper_essential(type, s), expected.count(mask) == 1) << type.to_string();
    }
  }
}

TEST(PrimaryCriterion, Examples) {
  EXPECT_TRUE(primary_criterion(zmod({4}), Element(2)));
  EXPECT_FALSE(primary_criterion(zmod({6}), Element(2)));
  EXPECT_TRUE(primary_criterion(zmod({12}), Element(2)));
  EXPECT_FALSE(primary_criterion(zmod({12}), Element(3)));
  EXPECT_THROW(primary_criterion(zmod({12}), Element(4)), DomainError);
  EXPECT_THROW(primary_criterion(zmod({12}, 1), Element(2)), DomainError);
}

// Ann_M(p^k) chain computed from element orders in Z/12.
TEST(PrimaryCriterion, BruteForceChainInZ12) {
  const FGModule m = zmod({12});
  for (long p : {2L, 3L}) {
    std::vector<std::size_t> sizes;
    long pk = 1;
    for (int k = 1; k <= 4; ++k) {
      pk *= p;
      std::size_t killed = 0;
      for (long u = 0; u < 12; ++u) killed += (u * pk) % 12 == 0;
      sizes.push_back(killed);
    }
    EXPECT_EQ(primary_criterion(m, Element(p)), sizes.back() > sizes.front());
  }
}

TEST(SocleEssential, Examples) {
  EXPECT_TRUE(is_socle_essential(zmod({4})));
  EXPECT_FALSE(is_socle_essential(zmod({6})));
  EXPECT_FALSE(is_socle_essential(zmod({4}, 1)));
}

TEST(Laws, DirectSumOfSmallTypes) {
  const auto types = isomorphism_types(Z, 24);
  for (const auto& a : types)
    for (const auto& b : types)
      EXPECT_EQ(has_proper_essential(direct_sum(a, b)).exists,
                has_proper_essential(a).exists || has_proper_essential(b).exists);
}

TEST(Laws, PrimeOrderHasNone) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 97L}) EXPECT_FALSE(has_proper_essential(zmod({p})).exists);
}

TEST(Laws, MatrixModuleHasOne) {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(has_proper_essential(zmod({}, m * n)).exists);
}
