#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

using Element = std::uint32_t;

/// A subset of {0..n-1}. Ordering is by size, then by the bitset read as a
/// little-endian integer (element 0 is the least significant bit).
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  SubsetMask(std::size_t n, std::initializer_list<Element> members) : SubsetMask(n) {
    for (auto m : members) insert(m);
  }

  static SubsetMask full(std::size_t n) {
    SubsetMask m(n);
    for (std::size_t i = 0; i < n; ++i) m.insert(static_cast<Element>(i));
    return m;
  }
  static SubsetMask zero(std::size_t n) { return SubsetMask(n, {0}); }

  std::size_t universe() const noexcept { return n_; }

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Element x) {
    if (x >= n_) throw Error(errc::out_of_range, "element " + std::to_string(x));
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(Element x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const noexcept {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }
  bool is_zero() const noexcept { return size() == 1 && contains(0); }
  bool is_full() const noexcept { return size() == n_; }

  bool is_subset_of(const SubsetMask& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  SubsetMask operator&(const SubsetMask& other) const {
    SubsetMask out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
  }
  SubsetMask operator|(const SubsetMask& other) const {
    SubsetMask out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
    return out;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        out.push_back(static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  /// "{0,2,4}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto e : elements()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

  friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + w;
    return h;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetMaskHash {
  std::size_t operator()(const SubsetMask& m) const noexcept { return m.hash(); }
};

}  // namespace skewbrace
