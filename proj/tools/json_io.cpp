#include "json_io.hpp"

#include <limits>
#include <string>

namespace essentia::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw DomainError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw DomainError(std::string("\"") + key + "\" must be an array");
  return v;
}

Json matrix_entries(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& e : m.row(i)) row.push_back(element_to_json(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_entries(const Json& entries, Ring ring, std::size_t rows, std::size_t cols, const char* what) {
  if (entries.size() != rows) throw DomainError(std::string(what) + " has " + std::to_string(entries.size()) +
                                                " rows, expected " + std::to_string(rows));
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw DomainError(std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(cols) +
                        " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(row[k], ring);
  }
  return m;
}

}  // namespace

Ring ring_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "int") return Ring::integers();
    if (s.rfind("polymod:", 0) == 0) {
      const std::string digits = s.substr(8);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
        throw DomainError("bad ring \"" + s + "\"");
      return Ring::polymod(static_cast<std::uint32_t>(std::stoull(digits)));
    }
    throw DomainError("unknown ring \"" + s + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("polymod")) {
    const Json& p = j["polymod"];
    if (!p.is_number_unsigned() || p.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
      throw DomainError("\"polymod\" must be a prime below 2^31");
    return Ring::polymod(p.get<std::uint32_t>());
  }
  throw DomainError("ring must be \"int\", \"polymod:p\" or {\"polymod\": p}");
}

Json ring_to_json(Ring ring) {
  if (ring.is_int()) return "int";
  return Json{{"polymod", ring.p}};
}

Ring ring_of(const Json& j, std::optional<Ring> fallback) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  const auto it = j.find("ring");
  if (it == j.end()) return fallback.value_or(Ring::integers());
  const Ring r = ring_from_json(*it);
  if (fallback && !(*fallback == r))
    throw DomainError("--ring " + fallback->name() + " conflicts with input ring " + r.name());
  return r;
}

Element element_from_json(const Json& j, Ring ring) {
  if (j.is_number_integer()) {
    const mpz_class v = j.is_number_unsigned() ? mpz_class(std::to_string(j.get<std::uint64_t>()))
                                               : mpz_class(std::to_string(j.get<std::int64_t>()));
    return parse_element(v.get_str(), ring);
  }
  if (j.is_string()) return parse_element(j.get<std::string>(), ring);
  if (j.is_array() && !ring.is_int()) {
    std::vector<long long> coeffs;
    for (const auto& c : j) {
      if (!c.is_number_integer()) throw DomainError("polynomial coefficients must be integers");
      coeffs.push_back(c.get<long long>());
    }
    return Element::poly(ring.p, coeffs);
  }
  throw DomainError("cannot read " + j.dump() + " as an element of " + ring.name());
}

Json element_to_json(const Element& e) {
  if (e.ring().is_int()) {
    const mpz_class& v = e.as_int();
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
  }
  Json out = Json::array();
  for (auto c : e.coeffs()) out.push_back(c);
  return out;
}

FGModule module_from_json(const Json& j, std::optional<Ring> fallback) {
  const Ring ring = ring_of(j, fallback);
  const std::size_t betti = j.contains("betti") ? count_field(j, "betti") : 0;
  std::vector<Element> orders;
  for (const auto& f : array_field(j, "factors")) {
    Element e = element_from_json(f, ring);
    if (e.is_zero()) throw DomainError("invariant factors must be non-zero; use \"betti\" for free rank");
    orders.push_back(std::move(e));
  }
  return FGModule::from_cyclic_orders(ring, betti, orders);
}

Json module_to_json(const FGModule& m) {
  Json factors = Json::array();
  for (const auto& a : m.factors()) factors.push_back(element_to_json(a));
  return Json{{"ring", ring_to_json(m.ring())}, {"betti", m.betti()}, {"factors", factors}};
}

Json module_element_to_json(const ModuleElement& x) {
  Json free = Json::array(), torsion = Json::array();
  for (const auto& e : x.free()) free.push_back(element_to_json(e));
  for (const auto& e : x.torsion()) torsion.push_back(element_to_json(e));
  return Json{{"free", free}, {"torsion", torsion}};
}

Matrix matrix_from_json(const Json& j, std::optional<Ring> fallback) {
  const Ring ring = ring_of(j, fallback);
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (rows > kMaxMatrixDim || cols > kMaxMatrixDim)
    throw CapacityError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the " +
                        std::to_string(kMaxMatrixDim) + "x" + std::to_string(kMaxMatrixDim) + " cap");
  return matrix_from_entries(array_field(j, "entries"), ring, rows, cols, "\"entries\"");
}

Json matrix_to_json(const Matrix& m) {
  return Json{{"ring", ring_to_json(m.ring())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_entries(m)}};
}

Json smith_to_json(const SmithDecomposition& snf) {
  Json diag = Json::array();
  const std::size_t n = std::min(snf.diagonal.rows(), snf.diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) diag.push_back(element_to_json(snf.diagonal(i, i)));
  return Json{{"rank", snf.rank()},
              {"diagonal", diag},
              {"S", matrix_to_json(snf.diagonal)},
              {"U", matrix_to_json(snf.left)},
              {"V", matrix_to_json(snf.right)}};
}

IntLattice lattice_from_json(const Json& j, std::optional<Ring> fallback) {
  const Ring ring = ring_of(j, fallback);
  const std::size_t n = count_field(j, "ambient_rank");
  if (n > kMaxMatrixDim) throw CapacityError("ambient rank exceeds the cap of " + std::to_string(kMaxMatrixDim));
  const Json& basis = array_field(j, "basis");
  if (basis.size() > kMaxMatrixDim) throw CapacityError("basis exceeds the cap of " + std::to_string(kMaxMatrixDim) + " rows");
  return IntLattice(ring, n, matrix_from_entries(basis, ring, basis.size(), n, "\"basis\""));
}

Json lattice_to_json(const IntLattice& l) {
  return Json{{"ring", ring_to_json(l.ring())}, {"ambient_rank", l.ambient_rank()}, {"basis", matrix_entries(l.basis())}};
}

Json reason_to_json(const EssentialReason& r) {
  switch (r.kind) {
    case ReasonKind::BettiPositive:
      return Json{{"kind", "BettiPositive"}};
    case ReasonKind::NonSquarefreeFactor:
      return Json{{"kind", "NonSquarefreeFactor"},
                  {"index", r.index},
                  {"prime", element_to_json(*r.prime)},
                  {"exponent", r.exponent}};
    case ReasonKind::None:
      break;
  }
  return Json{{"kind", "None"}};
}

Json witness_to_json(const EssentialWitness& w) {
  Json gens = Json::array();
  for (const auto& g : w.submodule.generators()) gens.push_back(module_element_to_json(g));
  const auto& c = w.certificate;
  return Json{{"generators", gens},
              {"certificate",
               {{"component", c.component == WitnessCertificate::Component::Free ? "free" : "torsion"},
                {"index", c.index},
                {"ideal_generator", element_to_json(c.ideal_generator)}}}};
}

Json verdict_to_json(const EssentialVerdict& v) {
  Json out{{"exists", v.exists}, {"reason", reason_to_json(v.reason)}};
  out["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  return out;
}

Json socle_to_json(const Socle& s) {
  Json decomposition = Json::array();
  for (const auto& [p, copies] : s.decomposition)
    decomposition.push_back(Json{{"prime", element_to_json(p)}, {"copies", copies}});
  Json gens = Json::array();
  for (const auto& g : s.submodule.generators()) gens.push_back(module_element_to_json(g));
  return Json{{"decomposition", decomposition}, {"generators", gens}};
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"module", r.module}, {"pass", r.passed()}, {"checks", checks}};
}

}  // namespace essentia::io
