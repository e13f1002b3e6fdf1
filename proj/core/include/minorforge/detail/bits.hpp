#pragma once

// Fixed-width bitsets used inside the solvers. A graph of order n is loaded
// into rows of Bits<W> with W = ceil(n / 64) rounded up to a power of two, so
// the hot loops unroll over a compile-time word count.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace minorforge::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  static constexpr std::size_t kCapacity = W * 64;

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(std::size_t i) const {
    return (w[i >> 6] >> (i & 63)) & 1U;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  [[nodiscard]] bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  [[nodiscard]] bool none() const { return !any(); }

  // Index of the lowest set bit, or kCapacity when empty.
  [[nodiscard]] std::size_t first() const {
    for (std::size_t k = 0; k < W; ++k)
      if (w[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
    return kCapacity;
  }

  [[nodiscard]] bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < W; ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  [[nodiscard]] bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < W; ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  [[nodiscard]] std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < W; ++k)
      c += static_cast<std::size_t>(std::popcount(w[k] & o.w[k]));
    return c;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) w[k] &= o.w[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) w[k] |= o.w[k];
    return *this;
  }
  // this &= ~o
  Bits& operator-=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) w[k] &= ~o.w[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  static Bits prefix(std::size_t n) {
    Bits b;
    for (std::size_t k = 0; k < W; ++k) {
      if (n >= (k + 1) * 64) {
        b.w[k] = ~std::uint64_t{0};
      } else if (n > k * 64) {
        b.w[k] = (std::uint64_t{1} << (n - k * 64)) - 1;
      }
    }
    return b;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < W; ++k) {
      std::uint64_t x = w[k];
      while (x) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

// Calls fn(std::integral_constant<std::size_t, W>{}) with the smallest W in
// {1, 2, 4, 8} that holds `order` bits.
template <class Fn>
decltype(auto) dispatch_width(std::size_t order, Fn&& fn) {
  if (order <= 64) return fn(std::integral_constant<std::size_t, 1>{});
  if (order <= 128) return fn(std::integral_constant<std::size_t, 2>{});
  if (order <= 256) return fn(std::integral_constant<std::size_t, 4>{});
  if (order <= 512) return fn(std::integral_constant<std::size_t, 8>{});
  throw std::invalid_argument("graph order exceeds solver capacity (512)");
}

template <std::size_t W>
Bits<W> load_row(std::span<const std::uint64_t> row) {
  Bits<W> b;
  for (std::size_t k = 0; k < row.size() && k < W; ++k) b.w[k] = row[k];
  return b;
}

}  // namespace minorforge::detail
