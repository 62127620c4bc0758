#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>

namespace pommer {

// Fixed-capacity vector with value semantics. Game states embed these so that
// copying a state on the search hot path is a flat memcpy, no heap traffic.
template <typename T, std::size_t Cap>
class InlineVec {
 public:
  using value_type = T;

  InlineVec() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  static constexpr std::size_t capacity() { return Cap; }

  void push_back(const T& v) {
    assert(size_ < Cap);
    items_[size_++] = v;
  }

  void clear() { size_ = 0; }

  void resize(std::size_t n, const T& fill = T{}) {
    assert(n <= Cap);
    for (std::size_t i = size_; i < n; ++i) items_[i] = fill;
    size_ = n;
  }

  // Stable removal; shifts the tail down by one.
  void erase_at(std::size_t i) {
    assert(i < size_);
    for (std::size_t k = i + 1; k < size_; ++k) items_[k - 1] = items_[k];
    --size_;
  }

  T& operator[](std::size_t i) {
    assert(i < size_);
    return items_[i];
  }
  const T& operator[](std::size_t i) const {
    assert(i < size_);
    return items_[i];
  }

  T& back() { return items_[size_ - 1]; }
  const T& back() const { return items_[size_ - 1]; }

  T* begin() { return items_.data(); }
  T* end() { return items_.data() + size_; }
  const T* begin() const { return items_.data(); }
  const T* end() const { return items_.data() + size_; }

  friend bool operator==(const InlineVec& a, const InlineVec& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (!(a.items_[i] == b.items_[i])) return false;
    return true;
  }

 private:
  std::size_t size_ = 0;
  std::array<T, Cap> items_{};
};

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed mixers for deriving independent sub-streams (per game / per agent).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  return splitmix64(s);
}
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                              std::uint64_t d) {
  return mix_seed(mix_seed(a, b, c), d);
}

// xoshiro256** seeded via splitmix64. We ship our own generator instead of
// std::mt19937 so that replays and seeded experiments are reproducible across
// standard libraries, not just across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x853c49e6748fea9bULL) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound). bound must be positive.
  int next_int(int bound) {
    assert(bound > 0);
    return static_cast<int>(
        (static_cast<unsigned __int128>(next_u64()) *
         static_cast<unsigned __int128>(bound)) >> 64);
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  bool chance(double p) { return next_double() < p; }

  std::uint64_t fork_seed() { return next_u64(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace pommer
