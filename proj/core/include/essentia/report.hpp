#pragma once

#include <string>
#include <vector>

namespace essentia {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Named pass/fail checks about one object.
struct Report {
  std::string module;
  std::vector<Check> checks;

  bool passed() const;
  void append(const Report& other);
};

}  // namespace essentia
