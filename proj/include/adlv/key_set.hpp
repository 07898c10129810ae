#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace adlv {

// Open-addressing hash set of 64-bit keys. The all-ones key is reserved as the
// empty marker; packed element keys never take that value.
class KeySet {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  KeySet() { rehash(16); }

  bool insert(std::uint64_t key) {
    if ((size_ + 1) * 4 > slots_.size() * 3) rehash(slots_.size() * 2);
    std::size_t i = probe(key);
    if (slots_[i] == key) return false;
    slots_[i] = key;
    ++size_;
    return true;
  }
  bool contains(std::uint64_t key) const { return slots_[probe(key)] == key; }
  std::size_t size() const { return size_; }
  void reserve(std::size_t n) {
    std::size_t cap = 16;
    while (cap * 3 < n * 4) cap *= 2;
    if (cap > slots_.size()) rehash(cap);
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return x;
  }
  std::size_t probe(std::uint64_t key) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = mix(key) & mask;
    while (slots_[i] != kEmpty && slots_[i] != key) i = (i + 1) & mask;
    return i;
  }
  void rehash(std::size_t cap) {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(cap, kEmpty);
    size_ = 0;
    for (std::uint64_t k : old)
      if (k != kEmpty) {
        slots_[probe(k)] = k;
        ++size_;
      }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
};

}  // namespace adlv
