#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "finring/error.hpp"

namespace finring {

/// Membership mask over the elements 0..n-1 of a finite ring.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  static Mask of(std::size_t n, const std::vector<Elem>& members) {
    Mask m(n);
    for (Elem e : members) m.set(e);
    return m;
  }

  std::size_t universe() const { return bits_.size(); }
  bool test(Elem e) const { return bits_[e] != 0; }
  bool operator[](Elem e) const { return test(e); }
  void set(Elem e, bool value = true) { bits_[e] = value ? 1 : 0; }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }
  bool full() const { return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }); }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<Elem>(i));
    return out;
  }

  bool subset_of(const Mask& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const Mask&, const Mask&) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool operator<(const Mask& a, const Mask& b) {
    const std::size_t n = std::min(a.bits_.size(), b.bits_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.bits_[i] == b.bits_[i]) continue;
      // Position i is the next member of exactly one list; the other list
      // either continues with a larger member or has ended (and is a prefix).
      if (a.bits_[i]) return b.any_after(i);
      return !a.any_after(i);
    }
    return a.bits_.size() < b.bits_.size();
  }

 private:
  bool any_after(std::size_t i) const {
    return std::any_of(bits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, bits_.end(),
                       [](auto b) { return b != 0; });
  }

  std::vector<std::uint8_t> bits_;
};

}  // namespace finring
