#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "subauct/errors.hpp"

namespace subauct {

/// Hard upper bound on universe sizes; also the ceiling for the
/// SUBAUCT_MAX_UNIVERSE override.
inline constexpr int kUniverseHardCap = 24;

/// Default cap for operations that enumerate all 2^m subsets. Overridable
/// through the SUBAUCT_MAX_UNIVERSE environment variable (clamped to
/// [1, kUniverseHardCap]).
int max_universe();

/// Throws UniverseTooLarge when `op` would need 2^m work beyond the cap.
void require_enumerable(int m, const char* op);

/// A subset of {0,...,m-1} in characteristic-bit encoding. Subsets of the
/// same universe are ordered and iterated by their numeric encoding.
class ItemSet {
 public:
  ItemSet(int universe_size, std::uint32_t bits)
      : m_(universe_size), bits_(bits) {
    if (m_ < 1 || m_ > kUniverseHardCap)
      throw UniverseTooLarge("universe size " + std::to_string(m_) +
                             " out of range [1," +
                             std::to_string(kUniverseHardCap) + "]");
    if (m_ < 32 && (bits_ >> m_) != 0)
      throw UniverseMismatch("set members outside universe of size " +
                             std::to_string(m_));
  }

  static ItemSet empty(int m) { return ItemSet(m, 0); }
  static ItemSet full(int m) {
    return ItemSet(m, static_cast<std::uint32_t>((1u << m) - 1));
  }
  static ItemSet of(int m, std::initializer_list<int> items) {
    std::uint32_t b = 0;
    for (int i : items) b |= bit_for(m, i);
    return ItemSet(m, b);
  }
  static ItemSet single(int m, int item) {
    return ItemSet(m, bit_for(m, item));
  }

  int universe_size() const { return m_; }
  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty_set() const { return bits_ == 0; }

  bool contains(int item) const { return (bits_ >> item) & 1u; }
  bool subset_of(const ItemSet& other) const {
    check_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool disjoint_from(const ItemSet& other) const {
    check_universe(other);
    return (bits_ & other.bits_) == 0;
  }

  ItemSet with(int item) const { return ItemSet(m_, bits_ | bit_for(m_, item)); }
  ItemSet without(int item) const {
    return ItemSet(m_, bits_ & ~bit_for(m_, item));
  }
  ItemSet unite(const ItemSet& o) const {
    check_universe(o);
    return ItemSet(m_, bits_ | o.bits_);
  }
  ItemSet intersect(const ItemSet& o) const {
    check_universe(o);
    return ItemSet(m_, bits_ & o.bits_);
  }
  ItemSet minus(const ItemSet& o) const {
    check_universe(o);
    return ItemSet(m_, bits_ & ~o.bits_);
  }
  ItemSet complement() const { return ItemSet(m_, ~bits_ & full_mask()); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>((1u << m_) - 1);
  }

  bool operator==(const ItemSet& o) const {
    return m_ == o.m_ && bits_ == o.bits_;
  }
  bool operator!=(const ItemSet& o) const { return !(*this == o); }

  /// "{0,2,3}" rendering for reports and error messages.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < m_; ++i) {
      if (!contains(i)) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  static std::uint32_t bit_for(int m, int item) {
    if (item < 0 || item >= m)
      throw UniverseMismatch("item " + std::to_string(item) +
                             " outside universe of size " + std::to_string(m));
    return 1u << item;
  }
  void check_universe(const ItemSet& o) const {
    if (m_ != o.m_)
      throw UniverseMismatch("sets over different universes (" +
                             std::to_string(m_) + " vs " +
                             std::to_string(o.m_) + ")");
  }

  int m_;
  std::uint32_t bits_;
};

}  // namespace subauct
