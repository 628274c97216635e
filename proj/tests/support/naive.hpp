#pragma once

// Submodules of a tiny finite abelian group Z/n_1 x ... x Z/n_k found by
// testing every subset of the element tuples for closure. Shares no code
// with the library.

#include <cstdint>
#include <set>
#include <vector>

namespace testing_support {

class NaiveGroup {
 public:
  /// Orders of the cyclic factors, first factor least significant.
  explicit NaiveGroup(std::vector<unsigned> orders) : orders_(std::move(orders)) {
    size_ = 1;
    for (unsigned n : orders_) size_ *= n;
  }

  unsigned size() const { return size_; }

  unsigned add(unsigned u, unsigned v) const {
    unsigned out = 0, place = 1;
    for (unsigned n : orders_) {
      out += ((u % n + v % n) % n) * place;
      u /= n;
      v /= n;
      place *= n;
    }
    return out;
  }

  /// All subgroups as bitmasks over element indices (order <= 16 only).
  std::vector<std::uint32_t> subgroups() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size_); ++mask) {
      if (!(mask & 1u)) continue;
      bool closed = true;
      for (unsigned u = 0; u < size_ && closed; ++u) {
        if (!(mask >> u & 1u)) continue;
        for (unsigned v = 0; v < size_ && closed; ++v)
          if ((mask >> v & 1u) && !(mask >> add(u, v) & 1u)) closed = false;
      }
      if (closed) out.push_back(mask);
    }
    return out;
  }

  /// Subgroups E with 0 != E != G meeting every non-zero subgroup beyond 0.
  std::set<std::uint32_t> proper_essentials() const {
    const auto subs = subgroups();
    const std::uint32_t top = (size_ >= 32) ? ~0u : ((std::uint32_t{1} << size_) - 1);
    std::set<std::uint32_t> out;
    for (auto e : subs) {
      if (e == 1u || e == top) continue;
      bool essential = true;
      for (auto s : subs)
        if (s != 1u && ((s & e) == 1u)) essential = false;
      if (essential) out.insert(e);
    }
    return out;
  }

 private:
  std::vector<unsigned> orders_;
  unsigned size_ = 1;
};

}  // namespace testing_support
