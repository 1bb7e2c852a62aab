#pragma once

// Backtracking search for structure-preserving bijections between finite
// algebras given by one or more binary operation tables on {0..n-1}. Every
// operation must be a group law with identity 0; the first operation must be
// generated by the chosen generators, which makes any extension total.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "skewbrace/subset_mask.hpp"

namespace skewbrace::detail {

struct TableView {
  std::size_t n = 0;
  const Element* data = nullptr;
  Element op(Element a, Element b) const { return data[a * n + b]; }
};

inline std::size_t element_order(TableView t, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = t.op(y, x)) ++k;
  return k;
}

/// Subgroup of the table's group generated by `seed` (always contains 0).
inline SubsetMask closure(TableView t, const SubsetMask& seed) {
  SubsetMask out(t.n);
  out.insert(0);
  std::vector<Element> members{0};
  std::vector<Element> gens = seed.elements();
  for (auto g : gens) {
    if (!out.contains(g)) {
      out.insert(g);
      members.push_back(g);
    }
  }
  // Closure under right multiplication by the generators suffices in a
  // finite group.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : gens) {
      Element z = t.op(members[head], g);
      if (!out.contains(z)) {
        out.insert(z);
        members.push_back(z);
      }
    }
  }
  return out;
}

/// Greedy generating set: repeatedly add the smallest element outside the
/// subgroup generated so far.
inline std::vector<Element> greedy_generators(TableView t) {
  std::vector<Element> gens;
  SubsetMask current = SubsetMask::zero(t.n);
  for (Element x = 0; x < t.n; ++x) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current.insert(x);
    current = closure(t, current);
  }
  return gens;
}

class MorphismSearch {
 public:
  MorphismSearch(std::vector<TableView> src, std::vector<TableView> dst)
      : src_(std::move(src)), dst_(std::move(dst)) {
    n_ = src_.front().n;
    feasible_ = dst_.front().n == n_ && src_.size() == dst_.size();
    if (!feasible_) return;
    src_sig_.resize(n_);
    dst_sig_.resize(n_);
    for (Element x = 0; x < n_; ++x) {
      for (std::size_t k = 0; k < src_.size(); ++k) {
        src_sig_[x].push_back(element_order(src_[k], x));
        dst_sig_[x].push_back(element_order(dst_[k], x));
      }
    }
    auto a = src_sig_;
    auto b = dst_sig_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    feasible_ = a == b;
    gens_ = greedy_generators(src_.front());
  }

  /// Calls `on_found(phi)` for every morphism; stops when it returns false.
  template <class F>
  void run(F&& on_found) {
    if (!feasible_) return;
    phi_.assign(n_, kUnset);
    used_.assign(n_, false);
    mapped_.clear();
    if (!assign(0, 0)) return;
    stop_ = false;
    dfs(0, on_found);
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool assign(Element x, Element y) {
    if (used_[y]) return false;
    std::size_t first = mapped_.size();
    phi_[x] = y;
    used_[y] = true;
    mapped_.push_back(x);
    for (std::size_t head = first; head < mapped_.size(); ++head) {
      Element z = mapped_[head];
      for (std::size_t i = 0; i <= head; ++i) {
        Element w = mapped_[i];
        for (std::size_t k = 0; k < src_.size(); ++k) {
          if (!extend(src_[k].op(z, w), dst_[k].op(phi_[z], phi_[w]))) return false;
          if (!extend(src_[k].op(w, z), dst_[k].op(phi_[w], phi_[z]))) return false;
        }
      }
    }
    return true;
  }

  bool extend(Element x, Element y) {
    if (phi_[x] != kUnset) return phi_[x] == y;
    if (used_[y]) return false;
    phi_[x] = y;
    used_[y] = true;
    mapped_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (mapped_.size() > mark) {
      Element x = mapped_.back();
      mapped_.pop_back();
      used_[phi_[x]] = false;
      phi_[x] = kUnset;
    }
  }

  template <class F>
  void dfs(std::size_t depth, F& on_found) {
    if (stop_) return;
    if (depth == gens_.size()) {
      if (mapped_.size() == n_ && !on_found(std::as_const(phi_))) stop_ = true;
      return;
    }
    Element g = gens_[depth];
    if (phi_[g] != kUnset) {
      dfs(depth + 1, on_found);
      return;
    }
    for (Element h = 0; h < n_ && !stop_; ++h) {
      if (used_[h] || dst_sig_[h] != src_sig_[g]) continue;
      std::size_t mark = mapped_.size();
      if (assign(g, h)) dfs(depth + 1, on_found);
      undo(mark);
    }
  }

  std::vector<TableView> src_, dst_;
  std::size_t n_ = 0;
  bool feasible_ = false;
  bool stop_ = false;
  std::vector<std::vector<std::size_t>> src_sig_, dst_sig_;
  std::vector<Element> gens_;
  std::vector<Element> phi_;
  std::vector<bool> used_;
  std::vector<Element> mapped_;
};

}  // namespace skewbrace::detail
