#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace matopo {

// A set of process indices, packed into bits. Processes are dense 0..n-1.
class ProcSet {
 public:
  constexpr ProcSet() = default;
  constexpr explicit ProcSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ProcSet full(int n) {
    return ProcSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr ProcSet single(int i) { return ProcSet(1u << i); }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ProcSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  int count() const { return __builtin_popcount(bits_); }
  int min_index() const { return __builtin_ctz(bits_); }

  constexpr void add(int i) { bits_ |= 1u << i; }
  constexpr void remove(int i) { bits_ &= ~(1u << i); }

  friend constexpr ProcSet operator|(ProcSet a, ProcSet b) {
    return ProcSet(a.bits_ | b.bits_);
  }
  friend constexpr ProcSet operator&(ProcSet a, ProcSet b) {
    return ProcSet(a.bits_ & b.bits_);
  }
  ProcSet& operator|=(ProcSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ProcSet& operator&=(ProcSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  auto operator<=>(const ProcSet&) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Renders as "{a,b,c}" using the given display names.
std::string to_string(ProcSet s, const std::vector<std::string>& names);

}  // namespace matopo
