#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvpoly {

/// Edge ids live in [0, kMaxEdgeId]; a subset is a 64-bit mask over ids.
inline constexpr int kMaxEdgeId = 63;

class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static EdgeSet of(std::initializer_list<int> ids) {
    EdgeSet s;
    for (int e : ids) s = s.with(e);
    return s;
  }
  static EdgeSet from_ids(const std::vector<int>& ids) {
    EdgeSet s;
    for (int e : ids) s = s.with(e);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr EdgeSet first(int n) {
    return EdgeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int e) const {
    return e >= 0 && e <= kMaxEdgeId && ((bits_ >> e) & 1u);
  }
  EdgeSet with(int e) const {
    check_id(e);
    return EdgeSet(bits_ | (std::uint64_t{1} << e));
  }
  EdgeSet without(int e) const {
    check_id(e);
    return EdgeSet(bits_ & ~(std::uint64_t{1} << e));
  }
  constexpr bool is_subset_of(EdgeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  /// Largest id in the set; -1 when empty.
  constexpr int max_id() const {
    return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_);
  }
  constexpr int min_id() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    for (int e : *this) out.push_back(e);
    return out;
  }

  friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
  friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
  friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(EdgeSet a, EdgeSet b) = default;
  friend constexpr auto operator<=>(EdgeSet a, EdgeSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::string to_string() const {
    std::string s = "{";
    bool first_id = true;
    for (int e : *this) {
      if (!first_id) s += ",";
      s += std::to_string(e);
      first_id = false;
    }
    return s + "}";
  }

 private:
  static void check_id(int e) {
    if (e < 0 || e > kMaxEdgeId) {
      throw std::out_of_range("edge id " + std::to_string(e) + " outside [0, 63]");
    }
  }

  std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every subset of `ground`, starting from the empty set.
template <class F>
void for_each_subset(EdgeSet ground, F&& f) {
  const std::uint64_t g = ground.bits();
  std::uint64_t s = 0;
  while (true) {
    f(EdgeSet(s));
    if (s == g) break;
    s = (s - g) & g;  // next submask in increasing order
  }
}

}  // namespace lvpoly
