#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "essentia/agreement.hpp"
#include "essentia/isotypes.hpp"
#include "json_io.hpp"

namespace essentia::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  bool json = false;
  std::string ring;
  unsigned long long max_order = 32;
  std::uint64_t seed = 0;
};

// Raised for unusable input that is not a library error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Ring> ring_flag(const Options& o) {
  if (o.ring.empty()) return std::nullopt;
  return io::ring_from_json(Json(o.ring));
}

Json read_input(const Options& o, std::istream& in) {
  if (o.input.empty()) throw InputError("missing input (inline JSON, a file path, or - for stdin)");
  std::string text;
  const auto first = o.input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (o.input[first] == '{' || o.input[first] == '[')) {
    text = o.input;
  } else if (o.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(o.input);
    if (!file) throw InputError("cannot open input file '" + o.input + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) {
           return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                         return y.is_primitive();
                                       }));
         });
}

// Plain-text rendering of a JSON value: one key per line, nesting indented.
void render(const Json& j, std::ostream& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive() || is_scalar_list(value)) {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      } else {
        out << pad << key << ":\n";
        render(value, out, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_primitive() || is_scalar_list(value)) {
        out << pad << "- " << value.dump() << '\n';
      } else {
        out << pad << "-\n";
        render(value, out, depth + 1);
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    render(j, out, 0);
  }
}

void render_report(const Json& report, std::ostream& out) {
  out << (report["pass"].get<bool>() ? "PASS " : "FAIL ") << report["module"].get<std::string>() << '\n';
  for (const auto& c : report["checks"]) {
    out << "  " << (c["pass"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
  }
}

FGModule module_input(const Json& j, const Options& o) {
  if (j.is_object() && j.contains("entries")) {
    const Matrix relations = io::matrix_from_json(j, ring_flag(o));
    return presentation_to_module(relations.cols(), relations);
  }
  return io::module_from_json(j, ring_flag(o));
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const FGModule m = module_input(read_input(o, in), o);
  Json result{{"module", io::module_to_json(m)},
              {"description", m.to_string()},
              {"semisimple", is_semisimple(m)},
              {"socle", io::socle_to_json(socle(m))["decomposition"]},
              {"verdict", io::verdict_to_json(has_proper_essential(m))}};
  emit(result, o, out);
  return kExitOk;
}

int cmd_witness(const Options& o, std::istream& in, std::ostream& out) {
  const FGModule m = module_input(read_input(o, in), o);
  Json result{{"module", io::module_to_json(m)}};
  const Json w = io::witness_to_json(essential_witness(m));
  result["generators"] = w["generators"];
  result["certificate"] = w["certificate"];
  emit(result, o, out);
  return kExitOk;
}

int cmd_socle(const Options& o, std::istream& in, std::ostream& out) {
  const FGModule m = module_input(read_input(o, in), o);
  Json result{{"module", io::module_to_json(m)},
              {"socle", io::socle_to_json(socle(m))},
              {"semisimple", is_semisimple(m)},
              {"socle_essential", is_socle_essential(m)}};
  emit(result, o, out);
  return kExitOk;
}

int cmd_smith(const Options& o, std::istream& in, std::ostream& out) {
  const Matrix a = io::matrix_from_json(read_input(o, in), ring_flag(o));
  emit(io::smith_to_json(smith_normal_form(a)), o, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const FGModule m = module_input(read_input(o, in), o);
  const Report report = check_module(m, o.seed);
  const Json j = io::report_to_json(report);
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    render_report(j, out);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.max_order > kSweepCap)
    throw CapacityError("--max-order " + std::to_string(o.max_order) + " exceeds the sweep cap of " +
                        std::to_string(kSweepCap));
  const Ring ring = ring_flag(o).value_or(Ring::integers());
  const std::vector<FGModule> types = isomorphism_types(ring, o.max_order);

  // Workers take modules in any order; reports keep the enumeration order.
  std::vector<Report> reports(types.size());
  std::vector<std::exception_ptr> errors(types.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < types.size(); i = next++) {
      try {
        reports[i] = check_module(types[i], o.seed + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    list.push_back(io::report_to_json(r));
  }
  if (o.json) {
    Json result{{"ring", io::ring_to_json(ring)},
                {"max_order", o.max_order},
                {"seed", o.seed},
                {"types", types.size()},
                {"failed", failed},
                {"reports", list}};
    out << result.dump(2) << '\n';
  } else {
    for (const auto& r : list) render_report(r, out);
    out << types.size() << " types, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_saturate(const Options& o, std::istream& in, std::ostream& out) {
  const Json j = read_input(o, in);
  IntLattice result;
  if (j.is_object() && j.contains("lattice")) {
    const IntLattice n = io::lattice_from_json(j["lattice"], ring_flag(o));
    const IntLattice m = j.contains("ambient") ? io::lattice_from_json(j["ambient"], ring_flag(o))
                                               : IntLattice::full(n.ring(), n.ambient_rank());
    result = saturate(n, m);
  } else {
    result = saturate(io::lattice_from_json(j, ring_flag(o)));
  }
  emit(io::lattice_to_json(result), o, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential submodules, socles and saturation over Z and F_p[x]", "essentia"};
  app.require_subcommand(1, 1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"classify", "decide whether a module (or presentation matrix) has a proper essential submodule"},
      {"witness", "construct a proper essential submodule"},
      {"socle", "socle, its decomposition, and semisimplicity"},
      {"smith", "Smith normal form with transforms"},
      {"verify", "run every oracle check on one finite module"},
      {"sweep", "run every oracle check on all finite modules up to --max-order"},
      {"saturate", "saturate a lattice inside its ambient"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", o.input, "inline JSON, a file path, or - for stdin");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--ring", o.ring, "int or polymod:p");
    sub->add_option("--max-order", o.max_order, "largest module order for sweep")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed for randomized checks");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "classify") return cmd_classify(o, in, out);
    if (cmd == "witness") return cmd_witness(o, in, out);
    if (cmd == "socle") return cmd_socle(o, in, out);
    if (cmd == "smith") return cmd_smith(o, in, out);
    if (cmd == "verify") return cmd_verify(o, in, out);
    if (cmd == "sweep") return cmd_sweep(o, out);
    if (cmd == "saturate") return cmd_saturate(o, in, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace essentia::cli
