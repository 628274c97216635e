#include <gtest/gtest.h>

#include "essentia/fgmod.hpp"
#include "essentia/isotypes.hpp"

using namespace essentia;

namespace {

const Ring Z = Ring::integers();

FGModule zmod(std::vector<long> factors, std::size_t betti = 0) {
  std::vector<Element> f(factors.begin(), factors.end());
  return FGModule(Z, betti, f);
}

ModuleElement el(const FGModule& m, std::vector<long> torsion, std::vector<long> free = {}) {
  return m.element(std::vector<Element>(free.begin(), free.end()), std::vector<Element>(torsion.begin(), torsion.end()));
}

std::vector<std::uint64_t> codes(const Submodule& s) { return s.torsion_codes(); }

// Smallest k > 0 with k m = 0, by repeated addition.
long brute_order(const ModuleElement& m) {
  ModuleElement acc = m;
  for (long k = 1; k < 10000; ++k) {
    if (acc.is_zero()) return k;
    acc = acc + m;
  }
  return 0;
}

}  // namespace

TEST(FGModule, StrictConstructorValidates) {
  EXPECT_THROW(zmod({4, 2}), DomainError);
  EXPECT_THROW(zmod({1}), DomainError);
  EXPECT_THROW(zmod({-4}), DomainError);
  EXPECT_NO_THROW(zmod({2, 4}));
  EXPECT_EQ(zmod({2, 4}, 1).to_string(), "Z^1 + Z/2 + Z/4");
}

TEST(FGModule, FromCyclicOrdersNormalizes) {
  const std::vector<Element> orders{Element(4), Element(6), Element(0), Element(1), Element(-3)};
  const FGModule m = FGModule::from_cyclic_orders(Z, 0, orders);
  EXPECT_EQ(m.betti(), 1u);
  EXPECT_EQ(m.factors(), (std::vector<Element>{Element(6), Element(12)}));
  EXPECT_EQ(m.torsion_order(), 72u);
}

TEST(FGModule, Orders) {
  EXPECT_EQ(zmod({2, 4}).order(), 8u);
  EXPECT_THROW(zmod({2}, 1).order(), DomainError);
  const Ring F3 = Ring::polymod(3);
  const FGModule m(F3, 0, {Element::poly(3, {0, 0, 1})});
  EXPECT_EQ(m.order(), 9u);
  EXPECT_TRUE(FGModule().is_zero());
  EXPECT_EQ(FGModule().order(), 1u);
}

TEST(Elements, AddAndScale) {
  const FGModule m = zmod({2, 4});
  // coordinates are (Z/2, Z/4) in invariant order; the example Z/4 + Z/2 is the same module
  EXPECT_TRUE((el(m, {1, 3}) + el(m, {1, 1})).is_zero());
  EXPECT_EQ(Element(2) * el(m, {1, 1}), el(m, {0, 2}));
  const FGModule f = zmod({}, 1);
  EXPECT_EQ(Element(3) * el(f, {}, {2}), el(f, {}, {6}));
  EXPECT_THROW(el(m, {1, 1}) + el(f, {}, {1}), DomainError);
  EXPECT_EQ(el(m, {3, -1}), el(m, {1, 3}));
}

TEST(Elements, CodesRoundTrip) {
  const FGModule m = zmod({2, 6});
  for (std::uint64_t c = 0; c < m.order(); ++c) EXPECT_EQ(m.torsion_element(c).torsion_code(), c);
  EXPECT_EQ(el(m, {1, 0}).torsion_code(), 1u);
  EXPECT_EQ(el(m, {0, 1}).torsion_code(), 2u);
}

TEST(Annihilator, ExamplesAndBruteForce) {
  const FGModule m = zmod({2, 4});
  EXPECT_EQ(annihilator(m.zero_element()), Element(1));
  EXPECT_EQ(annihilator(el(m, {1, 2})), Element(2));
  EXPECT_EQ(annihilator(el(zmod({4}, 1), {0}, {1})), Element(0));
  for (const auto& type : isomorphism_types(Z, 48))
    for (std::uint64_t c = 0; c < type.order(); ++c) {
      const ModuleElement x = type.torsion_element(c);
      const Element a = annihilator(x);
      EXPECT_EQ(a, Element(brute_order(x))) << type.to_string() << " code " << c;
      if (!type.factors().empty()) EXPECT_TRUE(divides(a, type.factors().back()));
    }
}

TEST(Cyclic, Examples) {
  EXPECT_EQ(codes(cyclic(el(zmod({4}), {2}))), (std::vector<std::uint64_t>{0, 2}));
  const FGModule v = zmod({2, 2});
  EXPECT_EQ(codes(cyclic(el(v, {1, 1}))), (std::vector<std::uint64_t>{0, 3}));
  EXPECT_EQ(cyclic(el(zmod({2, 4}), {1, 1})).size(), 4u);
  EXPECT_THROW(cyclic(el(zmod({}, 1), {}, {1})), CapacityError);
}

TEST(Cyclic, SizeIsResidueCountOfAnnihilator) {
  for (const auto& type : isomorphism_types(Z, 40))
    for (std::uint64_t c = 0; c < type.order(); ++c) {
      const ModuleElement x = type.torsion_element(c);
      EXPECT_EQ(cyclic(x).size(), residue_count(annihilator(x)));
    }
}

TEST(Span, Examples) {
  const FGModule m = zmod({2, 4});
  EXPECT_TRUE(span(m, {}).is_zero());
  const ModuleElement gens[] = {el(m, {0, 2}), el(m, {1, 0})};
  EXPECT_EQ(span(m, gens).size(), 4u);
  const ModuleElement all[] = {m.generator(0), m.generator(1)};
  EXPECT_TRUE(span(m, all).is_whole());
  // idempotent
  const Submodule s = span(m, gens);
  const auto elems = s.elements();
  EXPECT_EQ(span(m, elems), s);
  EXPECT_TRUE(s.is_closed());
}

TEST(Span, NonClosedSetDetected) {
  const FGModule m = zmod({4});
  const ModuleElement e[] = {el(m, {0}), el(m, {1})};
  EXPECT_FALSE(Submodule::from_element_set(m, e).is_closed());
}

TEST(MixedSpan, FreeProjectionAndTorsion) {
  const FGModule m = zmod({4}, 1);
  const ModuleElement gens[] = {el(m, {1}, {2}), el(m, {1}, {4})};
  const Submodule s = mixed_span(m, gens);
  // free projection 2Z; torsion intersection spanned by 2*(2|1) - (4|1) = (0|1)
  EXPECT_EQ(s.free_basis().rows(), 1u);
  EXPECT_EQ(s.free_basis()(0, 0), Element(2));
  EXPECT_EQ(s.torsion_codes().size(), 4u);
  EXPECT_TRUE(s.contains(el(m, {3}, {6})));
  EXPECT_FALSE(s.contains(el(m, {0}, {1})));
}

TEST(Intersect, Finite) {
  const FGModule m = zmod({2, 4});
  const ModuleElement a[] = {el(m, {1, 0}), el(m, {0, 2})};
  const ModuleElement b[] = {el(m, {1, 2})};
  EXPECT_EQ(intersect(span(m, a), span(m, b)).size(), 2u);
}

TEST(Socle, Examples) {
  const Socle s4 = socle(zmod({4}));
  EXPECT_EQ(codes(s4.submodule), (std::vector<std::uint64_t>{0, 2}));
  EXPECT_EQ(s4.decomposition, (SocleDecomposition{{Element(2), 1}}));

  const Socle s6 = socle(zmod({6}));
  EXPECT_TRUE(s6.submodule.is_whole());
  EXPECT_EQ(s6.decomposition, (SocleDecomposition{{Element(2), 1}, {Element(3), 1}}));

  EXPECT_TRUE(socle(zmod({}, 1)).submodule.is_zero());
}

TEST(Socle, SizeAndSemisimpleFixedPoint) {
  for (const auto& type : isomorphism_types(Z, 128)) {
    const Socle s = socle(type);
    std::uint64_t expected = 1;
    for (const auto& [p, mult] : s.decomposition)
      for (std::size_t k = 0; k < mult; ++k) expected *= p.as_int().get_ui();
    EXPECT_EQ(s.submodule.size(), expected);
    EXPECT_EQ(is_semisimple(type), s.submodule.is_whole()) << type.to_string();
  }
}

TEST(Semisimple, Examples) {
  EXPECT_TRUE(is_semisimple(zmod({6})));
  EXPECT_FALSE(is_semisimple(zmod({4})));
  EXPECT_FALSE(is_semisimple(zmod({}, 1)));
  EXPECT_TRUE(is_semisimple(FGModule()));
}

TEST(PrimaryPart, Examples) {
  EXPECT_EQ(codes(primary_part(zmod({4}), Element(2), 1u)), (std::vector<std::uint64_t>{0, 2}));
  EXPECT_EQ(codes(primary_part(zmod({12}), Element(2), std::nullopt)), (std::vector<std::uint64_t>{0, 3, 6, 9}));
  EXPECT_TRUE(primary_part(zmod({4}), Element(2), 2u).is_whole());
  EXPECT_THROW(primary_part(zmod({4}), Element(4), 1u), DomainError);
  EXPECT_THROW(primary_part(zmod({4}, 1), Element(2), 1u), DomainError);
  EXPECT_THROW(primary_part(zmod({4}), Element(2), 0u), DomainError);
}

TEST(PrimaryPart, DecompositionIsDirect) {
  for (const auto& type : isomorphism_types(Z, 120)) {
    if (type.is_zero()) continue;
    std::vector<Submodule> parts;
    for (const auto& [p, e] : factor(type.factors().back()).factors)
      parts.push_back(primary_part(type, p, std::nullopt));
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      product *= parts[i].size();
      for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_TRUE(intersect(parts[i], parts[j]).is_zero());
    }
    EXPECT_EQ(product, type.order()) << type.to_string();
    std::vector<ModuleElement> gens;
    for (const auto& part : parts)
      for (const auto& g : part.elements()) gens.push_back(g);
    EXPECT_TRUE(span(type, gens).is_whole());
  }
}

TEST(TorsionPart, Examples) {
  const TorsionPart t = torsion_part(zmod({4}, 1));
  EXPECT_EQ(t.module, zmod({4}));
  EXPECT_EQ(t.embedding, std::vector<std::size_t>{1});
  EXPECT_TRUE(torsion_part(zmod({}, 2)).module.is_zero());
  EXPECT_EQ(torsion_part(zmod({2, 4})).module, zmod({2, 4}));
}

TEST(DirectSum, InvariantFactors) {
  EXPECT_EQ(direct_sum(zmod({2}), zmod({3})), zmod({6}));
  EXPECT_EQ(direct_sum(zmod({4}, 1), zmod({2})), zmod({2, 4}, 1));
}

TEST(Codec, AgreesWithElementArithmetic) {
  const Ring F2 = Ring::polymod(2);
  const FGModule m(F2, 0, {Element::poly(2, {1, 1}), Element::poly(2, {1, 0, 1})});
  const TorsionCodec codec(m);
  const Element x = Element::variable(F2);
  for (std::uint64_t u = 0; u < m.order(); ++u) {
    EXPECT_EQ(codec.mul_x(u), (x * m.torsion_element(u)).torsion_code());
    for (std::uint64_t v = 0; v < m.order(); ++v)
      EXPECT_EQ(codec.add(u, v), (m.torsion_element(u) + m.torsion_element(v)).torsion_code());
  }
  const FGModule z = zmod({3, 6});
  const TorsionCodec zc(z);
  for (std::uint64_t u = 0; u < z.order(); ++u) {
    EXPECT_EQ(zc.neg(u), element_neg(z.torsion_element(u)).torsion_code());
    EXPECT_EQ(zc.scale_int(u, 5), (Element(5) * z.torsion_element(u)).torsion_code());
  }
}
