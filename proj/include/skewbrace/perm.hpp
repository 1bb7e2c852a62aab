#pragma once

// Permutations of {0..d-1}. Points are 0-based in memory and 1-based in the
// text form "[2,3,1]" shared with the database format.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

class Permutation {
 public:
  using point_type = std::uint32_t;

  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_type{0});
    return p;
  }

  /// Takes 0-based images; throws if they are not a bijection.
  static Permutation from_images(std::vector<point_type> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto x : images) {
      if (x >= images.size() || seen[x]) {
        throw Error(errc::invalid_permutation,
                    "image list is not a bijection of its index range");
      }
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Takes 1-based images as in the text form.
  static Permutation from_one_based(std::span<const long long> images) {
    std::vector<point_type> zero_based;
    zero_based.reserve(images.size());
    for (auto x : images) {
      if (x < 1 || static_cast<std::size_t>(x) > images.size()) {
        throw Error(errc::invalid_permutation,
                    "point " + std::to_string(x) + " outside 1.." +
                        std::to_string(images.size()));
      }
      zero_based.push_back(static_cast<point_type>(x - 1));
    }
    return from_images(std::move(zero_based));
  }

  /// Parses "[2,3,1]"; whitespace around tokens is ignored.
  static Permutation parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw Error(errc::syntax, "permutation must be enclosed in brackets: '" +
                                    std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<long long> values;
    if (text.empty()) throw Error(errc::syntax, "empty permutation");
    while (true) {
      auto comma = text.find(',');
      auto token = trim(text.substr(0, comma));
      if (token.empty()) throw Error(errc::syntax, "empty entry in permutation");
      long long value = 0;
      for (char c : token) {
        if (c < '0' || c > '9') {
          throw Error(errc::syntax, "non-numeric entry '" + std::string(token) + "'");
        }
        value = value * 10 + (c - '0');
        if (value > (1LL << 31)) throw Error(errc::syntax, "entry too large");
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return from_one_based(values);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator()(point_type x) const { return images_[x]; }
  std::span<const point_type> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      p.images_[images_[i]] = static_cast<point_type>(i);
    }
    return p;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(images_[i] + 1);
    }
    out += ']';
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<point_type> images_;
};

/// Left-to-right product: the result maps x to q(p(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(errc::degree_mismatch, "compose of degrees " +
                                           std::to_string(p.degree()) + " and " +
                                           std::to_string(q.degree()));
  }
  std::vector<Permutation::point_type> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = q(p(static_cast<Permutation::point_type>(i)));
  }
  return Permutation::from_images(std::move(images));
}

/// Lexicographic comparison of the image lists.
inline std::strong_ordering lex_compare(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw Error(errc::degree_mismatch, "lex_compare of degrees " +
                                           std::to_string(f.degree()) + " and " +
                                           std::to_string(g.degree()));
  }
  auto a = f.images();
  auto b = g.images();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

struct SortedElements {
  std::vector<Permutation> sorted;
  /// sorted[k] == input[sigma(k)].
  Permutation sigma;
};

/// Sorts a list of distinct permutations of equal degree and records the
/// position permutation needed to undo the sort.
inline SortedElements sort_elements(std::span<const Permutation> elems) {
  std::vector<Permutation::point_type> order(elems.size());
  std::iota(order.begin(), order.end(), Permutation::point_type{0});
  for (const auto& e : elems) {
    if (e.degree() != elems.front().degree()) {
      throw Error(errc::degree_mismatch, "sort_elements on mixed degrees");
    }
  }
  std::sort(order.begin(), order.end(), [&](auto i, auto j) {
    return lex_compare(elems[i], elems[j]) < 0;
  });
  SortedElements out;
  out.sorted.reserve(elems.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && elems[order[k]] == elems[order[k - 1]]) {
      throw Error(errc::duplicate_element, "element " + elems[order[k]].to_string() +
                                               " listed twice");
    }
    out.sorted.push_back(elems[order[k]]);
  }
  out.sigma = Permutation::from_images(std::move(order));
  return out;
}

/// Inverse of sort_elements: result[j] = sorted[sigma^{-1}(j)].
inline std::vector<Permutation> unsort_elements(std::span<const Permutation> sorted,
                                                const Permutation& sigma) {
  if (sigma.degree() != sorted.size()) {
    throw Error(errc::degree_mismatch, "recovery permutation has degree " +
                                           std::to_string(sigma.degree()) + " for " +
                                           std::to_string(sorted.size()) + " elements");
  }
  std::vector<Permutation> out(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) out[sigma(static_cast<Permutation::point_type>(k))] = sorted[k];
  return out;
}

/// All elements of the group generated by `gens` (degree `degree`), in
/// breadth-first discovery order starting from the identity.
inline std::vector<Permutation> enumerate_permutation_group(std::span<const Permutation> gens,
                                                            std::size_t degree) {
  std::vector<Permutation> elems{Permutation::identity(degree)};
  auto key_less = [](const Permutation& a, const Permutation& b) { return lex_compare(a, b) < 0; };
  std::vector<Permutation> index{elems.front()};
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(errc::degree_mismatch, "generator degree");
  }
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elems[head], g);
      auto it = std::lower_bound(index.begin(), index.end(), next, key_less);
      if (it != index.end() && *it == next) continue;
      index.insert(it, next);
      elems.push_back(std::move(next));
    }
  }
  return elems;
}

}  // namespace skewbrace
