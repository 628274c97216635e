// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "essentia/closure.hpp"
#include "essentia/essential.hpp"
#include "essentia/isotypes.hpp"
#include "essentia/oracle.hpp"
#include "essentia/smith.hpp"
#include "support/golden.hpp"
#include "support/minors.hpp"

using namespace essentia;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool any_proper_essential(const oracle::SubmoduleLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.flags(i).proper_essential) return true;
  return false;
}

// Criterion-vs-oracle agreement and witness soundness over one family.
Outcome criterion_matches_oracle(const std::vector<FGModule>& types) {
  Outcome o;
  std::size_t with = 0;
  for (const auto& m : types) {
    const bool fast = has_proper_essential(m).exists;
    const bool slow = any_proper_essential(oracle::enumerate_submodules(m));
    with += slow;
    if (fast != slow) {
      o.pass = false;
      o.detail += " mismatch at " + m.to_string() + ";";
    }
  }
  o.detail = std::to_string(types.size()) + " types, " + std::to_string(with) + " with a proper essential submodule" +
             o.detail;
  return o;
}

Outcome witnesses_sound(const std::vector<FGModule>& types) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : types) {
    const EssentialVerdict v = has_proper_essential(m);
    if (!v.exists) continue;
    ++checked;
    if (!v.witness || !is_proper_essential(m, v.witness->submodule)) {
      o.pass = false;
      o.detail += " bad witness for " + m.to_string() + ";";
    }
  }
  o.detail = std::to_string(checked) + " witnesses pass the element sweep" + o.detail;
  return o;
}

template <typename Verify>
Outcome all_reports_pass(const std::vector<FGModule>& types, Verify verify) {
  Outcome o;
  for (const auto& m : types) {
    const Report r = verify(m);
    if (!r.passed()) {
      o.pass = false;
      for (const auto& c : r.checks)
        if (!c.pass) o.detail += " " + m.to_string() + " " + c.name + " (" + c.detail + ");";
    }
  }
  o.detail = std::to_string(types.size()) + " types" + o.detail;
  return o;
}

Outcome c1() { return criterion_matches_oracle(isomorphism_types(Ring::integers(), 128)); }

Outcome c2() { return witnesses_sound(isomorphism_types(Ring::integers(), 128)); }

Outcome c3() {
  return all_reports_pass(isomorphism_types(Ring::integers(), 64),
                          [](const FGModule& m) { return oracle::verify_baba(m); });
}

Outcome c4() {
  return all_reports_pass(isomorphism_types(Ring::integers(), 128),
                          [](const FGModule& m) { return oracle::verify_babama(m); });
}

Outcome c5() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& m : isomorphism_types(Ring::integers(), 128)) {
    if (m.is_zero()) continue;
    const oracle::SubmoduleLattice lattice = oracle::enumerate_submodules(m);
    const unsigned long order = static_cast<unsigned long>(m.order());
    for (unsigned long p = 2; p <= order; ++p) {
      bool prime = true;
      for (unsigned long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
      if (!prime || order % p != 0) continue;
      ++pairs;
      const bool fast = primary_criterion(m, Element(static_cast<long>(p)));
      bool square_divides = false;
      for (const auto& a : m.factors()) square_divides = square_divides || a.as_int().get_ui() % (p * p) == 0;
      const oracle::ElementSet part = oracle::primary_component(m, Element(static_cast<long>(p)));
      std::vector<std::uint32_t> old_index;
      const bool slow =
          any_proper_essential(oracle::enumerate_submodules(lattice.structure().restrict_to(part, old_index)));
      if (fast != square_divides || fast != slow) {
        o.pass = false;
        o.detail += " " + m.to_string() + " at p=" + std::to_string(p) + ";";
      }
    }
  }
  o.detail = std::to_string(pairs) + " (module, prime) pairs" + o.detail;
  return o;
}

Outcome c6() {
  return all_reports_pass(isomorphism_types(Ring::integers(), 128),
                          [](const FGModule& m) { return oracle::verify_sm(m); });
}

Outcome c7() {
  Outcome o;
  const auto types = isomorphism_types(Ring::integers(), 128);
  std::mt19937_64 rng(7);
  std::size_t done = 0, oracle_checked = 0;
  while (done < 200) {
    const FGModule& a = types[rng() % types.size()];
    const FGModule& b = types[rng() % types.size()];
    if (a.order() * b.order() > 256) continue;
    ++done;
    const FGModule s = direct_sum(a, b);
    const bool lhs = has_proper_essential(s).exists;
    const bool rhs = has_proper_essential(a).exists || has_proper_essential(b).exists;
    bool ok = lhs == rhs;
    if (s.order() <= 128) {
      ++oracle_checked;
      ok = ok && any_proper_essential(oracle::enumerate_submodules(s)) == rhs;
    }
    if (!ok) {
      o.pass = false;
      o.detail += " " + a.to_string() + " (+) " + b.to_string() + ";";
    }
  }
  o.detail = "200 pairs, " + std::to_string(oracle_checked) + " sums also checked by lattice search" + o.detail;
  return o;
}

Outcome c8() {
  Outcome o;
  using testing_support::IntMatrix;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  auto to_mpz = [](const Matrix& m) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).as_int();
    return out;
  };
  const Ring Z = Ring::integers();
  for (int t = 0; t < 500; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix a(Z, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = Element(entry(rng));
    const SmithDecomposition d = smith_normal_form(a);
    bool ok = d.left * a * d.right == d.diagonal && d.diagonal.is_diagonal();
    ok = ok && abs(testing_support::cofactor_det(to_mpz(d.left))) == 1 &&
         abs(testing_support::cofactor_det(to_mpz(d.right))) == 1;
    const std::size_t n = std::min(r, c);
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = d.diagonal(i, i).as_int() >= 0;
      if (i + 1 < n) ok = ok && divides(d.diagonal(i, i), d.diagonal(i + 1, i + 1));
    }
    ok = ok && testing_support::determinantal_divisors(to_mpz(a)) ==
                   testing_support::determinantal_divisors(to_mpz(d.diagonal));
    if (!ok) {
      o.pass = false;
      o.detail += " trial " + std::to_string(t) + ";";
    }
  }
  o.detail = "500 matrices up to 5x5" + o.detail;
  return o;
}

Outcome c9() {
  Outcome o;
  const Ring Z = Ring::integers();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> entry(-5, 5);
  auto random_lattice = [&](std::size_t max_rows) {
    const std::size_t rows = rng() % (max_rows + 1);
    Matrix g(Z, rows, 4);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < 4; ++j) g(i, j) = Element(entry(rng));
    return IntLattice(Z, 4, g);
  };
  // rank r lattice in Z^4 is saturated iff its r x r minors have gcd 1
  auto primitive = [](const IntLattice& l) {
    testing_support::IntMatrix m(l.rank(), std::vector<mpz_class>(4));
    for (std::size_t i = 0; i < l.rank(); ++i)
      for (std::size_t j = 0; j < 4; ++j) m[i][j] = l.basis()(i, j).as_int();
    return testing_support::determinantal_divisors(m).back() == 1;
  };
  const IntLattice z4 = IntLattice::full(Z, 4);
  std::size_t direct_pairs = 0;
  for (int t = 0; t < 300; ++t) {
    std::string fail;
    const IntLattice n = random_lattice(4);
    const IntLattice s = saturate(n);
    if (!s.contains(n) || s.rank() != n.rank() || !primitive(s)) fail += " extensive";
    if (!(saturate(s) == s)) fail += " idempotent";

    const IntLattice n2 = lattice_sum(n, random_lattice(2));
    if (!saturate(n2).contains(s)) fail += " monotone";

    const IntLattice a = random_lattice(2), b = random_lattice(2);
    if (lattice_sum(a, b).rank() == a.rank() + b.rank()) {
      ++direct_pairs;
      const auto [lhs, rhs] = saturated_sum(a, b, z4);
      if (!(lhs == rhs)) fail += " saturated_sum";
    }

    const std::size_t k = 1 + rng() % 4;
    Matrix f(Z, 4, k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < k; ++j) f(i, j) = Element(entry(rng) % 4);
    const auto [img_of_closure, closure_of_img] = closure_image(f, n);
    if (!closure_of_img.contains(img_of_closure)) fail += " image";

    const RankSequence seq = rank_sequence(n, n2, z4);
    if (!seq.additive() || !seq.lifts_in_closure) fail += " rank_sequence";

    if (!fail.empty()) {
      o.pass = false;
      o.detail += " trial " + std::to_string(t) + ":" + fail + ";";
    }
  }
  o.detail = "300 trials in Z^4, " + std::to_string(direct_pairs) + " independent pairs" + o.detail;
  return o;
}

Outcome c10() {
  Outcome o;
  o.detail = "";
  for (std::uint32_t p : {2u, 3u}) {
    const auto types = isomorphism_types(Ring::polymod(p), std::uint64_t{p} * p * p * p);
    const Outcome a = criterion_matches_oracle(types);
    const Outcome b = witnesses_sound(types);
    o.pass = o.pass && a.pass && b.pass;
    o.detail += "F" + std::to_string(p) + "[x]: " + a.detail + ", " + b.detail + ". ";
  }
  return o;
}

Outcome c11() {
  Outcome o;
  const auto cases = testing_support::load_manifest(ESSENTIA_GOLDEN_DIR, ESSENTIA_FIXTURE_DIR);
  for (const auto& c : cases) {
    const auto r = testing_support::run_cli(c.args);
    const auto again = testing_support::run_cli(c.args);
    const std::string expected = testing_support::read_file(std::string(ESSENTIA_GOLDEN_DIR) + "/" + c.name + ".out");
    if (r.exit_code != 0 || r.out != expected || again.out != r.out) {
      o.pass = false;
      o.detail += " " + c.name + ";";
    }
  }
  o.pass = o.pass && !cases.empty();
  o.detail = std::to_string(cases.size()) + " golden files" + o.detail;
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "criterion agrees with lattice search, Z-modules of order <= 128", 60, c1},
      {2, "witnesses are proper essential, Z-modules of order <= 128", 30, c2},
      {3, "semisimplicity equivalences, order <= 64", 60, c3},
      {4, "socle equals meet of essential submodules, order <= 128", 60, c4},
      {5, "primary criterion per prime, order <= 128", 60, c5},
      {6, "socle essential iff not semisimple, order <= 128", 60, c6},
      {7, "direct-sum law on random pairs", 30, c7},
      {8, "Smith normal form on random integer matrices", 30, c8},
      {9, "closure calculus on random lattices in Z^4", 30, c9},
      {10, "F_p[x] modules (p = 2, 3) of order <= p^4", 60, c10},
      {11, "CLI golden files are byte-identical", 60, c11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool within = secs <= c.budget_seconds;
    const bool pass = o.pass && within;
    failed += !pass;
    std::printf("[%s] %2d %s: %s (%.2f s of %.0f s%s)\n", pass ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(),
                secs, c.budget_seconds, within ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed;
}
