#pragma once

// Skew braces: two group laws "+" and "∘" on {0..n-1} sharing identity 0 and
// satisfying a∘(b+c) = a∘b - a + a∘c.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

class SkewBrace {
 public:
  SkewBrace() = default;

  /// Checks the brace law on all triples and builds the lambda table.
  static SkewBrace validate(CayleyGroup add, CayleyGroup mul) {
    if (add.order() != mul.order()) {
      throw Error(errc::order_mismatch, "additive order " + std::to_string(add.order()) +
                                            " vs multiplicative order " + std::to_string(mul.order()));
    }
    std::size_t n = add.order();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = mul.op(a, b);
        Element left_part = add.op(ab, add.inv(a));
        for (Element c = 0; c < n; ++c) {
          if (mul.op(a, add.op(b, c)) != add.op(left_part, mul.op(a, c))) {
            throw Error(errc::brace_law,
                        "a∘(b+c) != a∘b-a+a∘c at (" + std::to_string(a) + "," + std::to_string(b) +
                            "," + std::to_string(c) + ")",
                        std::array<std::size_t, 3>{a, b, c});
          }
        }
      }
    }
    SkewBrace out;
    out.n_ = n;
    out.add_ = std::move(add);
    out.mul_ = std::move(mul);
    out.lambda_.resize(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) out.lambda_[a * n + b] = out.add_.op(out.add_.inv(a), out.mul_.op(a, b));
    }
    out.check_lambda_homomorphism();
    return out;
  }

  std::size_t order() const noexcept { return n_; }
  const CayleyGroup& additive() const noexcept { return add_; }
  const CayleyGroup& multiplicative() const noexcept { return mul_; }

  Element plus(Element a, Element b) const { return add_.op(a, b); }
  Element neg(Element a) const { return add_.inv(a); }
  Element minus(Element a, Element b) const { return add_.op(a, add_.inv(b)); }
  Element circ(Element a, Element b) const { return mul_.op(a, b); }
  Element circ_inv(Element a) const { return mul_.inv(a); }
  /// λ_a(b) = -a + a∘b
  Element lambda(Element a, Element b) const { return lambda_[a * n_ + b]; }
  /// a★b = λ_a(b) - b
  Element star(Element a, Element b) const { return minus(lambda(a, b), b); }

  /// Relabels both operations by perm (perm must fix 0).
  SkewBrace relabel(const Permutation& perm) const {
    return validate(add_.relabel(perm), mul_.relabel(perm));
  }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  void check_lambda_homomorphism() const {
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        for (Element c = 0; c < n_; ++c) {
          if (lambda(a, add_.op(b, c)) != add_.op(lambda(a, b), lambda(a, c))) {
            throw Error(errc::internal_consistency, "λ_a is not additive");
          }
        }
        Element ab = mul_.op(a, b);
        for (Element c = 0; c < n_; ++c) {
          if (lambda(ab, c) != lambda(a, lambda(b, c))) {
            throw Error(errc::internal_consistency, "λ is not a homomorphism");
          }
        }
      }
    }
  }

  std::size_t n_ = 0;
  CayleyGroup add_;
  CayleyGroup mul_;
  std::vector<Element> lambda_;
};

inline SkewBrace validate_skew_brace(const std::vector<std::vector<Element>>& add_rows,
                                     const std::vector<std::vector<Element>>& mul_rows) {
  return SkewBrace::validate(validate_group(add_rows), validate_group(mul_rows));
}

inline SkewBrace trivial_brace(const CayleyGroup& g) { return SkewBrace::validate(g, g); }

inline Permutation lambda(const SkewBrace& a, Element x) {
  std::vector<Permutation::point_type> images(a.order());
  for (Element b = 0; b < a.order(); ++b) images[b] = a.lambda(x, b);
  return Permutation::from_images(std::move(images));
}

inline Element star(const SkewBrace& a, Element x, Element y) { return a.star(x, y); }

inline bool is_trivial(const SkewBrace& a) { return a.additive() == a.multiplicative(); }

inline bool is_classical(const SkewBrace& a) { return a.additive().is_abelian(); }

/// Opposite distributivity (a+b)∘c = a∘c - c + b∘c.
inline bool is_two_sided(const SkewBrace& a) {
  std::size_t n = a.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = a.plus(x, y);
      for (Element z = 0; z < n; ++z) {
        if (a.circ(xy, z) != a.plus(a.minus(a.circ(x, z), z), a.circ(y, z))) return false;
      }
    }
  }
  return true;
}

inline bool is_star_associative(const SkewBrace& a) {
  std::size_t n = a.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = a.star(x, y);
      for (Element z = 0; z < n; ++z) {
        if (a.star(xy, z) != a.star(x, a.star(y, z))) return false;
      }
    }
  }
  return true;
}

/// A map r on A x A, materialized as a table indexed by a * n + b.
struct YbMap {
  std::size_t n = 0;
  std::vector<std::pair<Element, Element>> image;

  std::pair<Element, Element> operator()(Element a, Element b) const { return image[a * n + b]; }
};

/// r(a, b) = (λ_a(b), λ_a(b)' ∘ a ∘ b)
inline YbMap yb_map(const SkewBrace& a) {
  YbMap r;
  r.n = a.order();
  r.image.resize(r.n * r.n);
  for (Element x = 0; x < r.n; ++x) {
    for (Element y = 0; y < r.n; ++y) {
      Element u = a.lambda(x, y);
      r.image[x * r.n + y] = {u, a.circ(a.circ_inv(u), a.circ(x, y))};
    }
  }
  return r;
}

struct YbVerdict {
  bool ok = true;
  std::string failure;
  std::optional<std::array<Element, 3>> witness;
};

/// Checks that r is a bijection, that r1 r2 r1 = r2 r1 r2 on every triple,
/// and that r is non-degenerate (each σ_x and τ_y is a permutation).
inline YbVerdict verify_yang_baxter(const YbMap& r) {
  std::size_t n = r.n;
  std::vector<bool> seen(n * n, false);
  for (const auto& [u, v] : r.image) {
    if (u >= n || v >= n || seen[u * n + v]) return {false, "r is not a bijection", std::nullopt};
    seen[u * n + v] = true;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        // left: r1 r2 r1
        auto [a1, b1] = r(x, y);
        auto [b2, c2] = r(b1, z);
        auto [a3, b3] = r(a1, b2);
        std::array<Element, 3> lhs{a3, b3, c2};
        // right: r2 r1 r2
        auto [q1, s1] = r(y, z);
        auto [p2, q2] = r(x, q1);
        auto [q3, s3] = r(q2, s1);
        std::array<Element, 3> rhs{p2, q3, s3};
        if (lhs != rhs) return {false, "braid relation fails", std::array<Element, 3>{x, y, z}};
      }
    }
  }
  std::vector<bool> hit(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (Element y = 0; y < n; ++y) {
      auto u = r(x, y).first;
      if (hit[u]) return {false, "σ_" + std::to_string(x) + " is not bijective", std::nullopt};
      hit[u] = true;
    }
  }
  for (Element y = 0; y < n; ++y) {
    std::fill(hit.begin(), hit.end(), false);
    for (Element x = 0; x < n; ++x) {
      auto v = r(x, y).second;
      if (hit[v]) return {false, "τ_" + std::to_string(y) + " is not bijective", std::nullopt};
      hit[v] = true;
    }
  }
  return {};
}

inline bool is_involutive(const YbMap& r) {
  for (Element x = 0; x < r.n; ++x) {
    for (Element y = 0; y < r.n; ++y) {
      auto [u, v] = r(x, y);
      if (r(u, v) != std::pair<Element, Element>{x, y}) return false;
    }
  }
  return true;
}

/// A bijection preserving both operations, re-verified on all pairs.
inline std::optional<Permutation> are_isomorphic_braces(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.additive().is_abelian() != b.additive().is_abelian() ||
      a.multiplicative().is_abelian() != b.multiplicative().is_abelian()) {
    return std::nullopt;
  }
  std::optional<Permutation> found;
  detail::MorphismSearch search({a.additive().view(), a.multiplicative().view()},
                                {b.additive().view(), b.multiplicative().view()});
  search.run([&](const std::vector<Element>& phi) {
    found = Permutation::from_images({phi.begin(), phi.end()});
    return false;
  });
  if (found) {
    const auto& phi = *found;
    for (Element x = 0; x < a.order(); ++x) {
      for (Element y = 0; y < a.order(); ++y) {
        if (phi(a.plus(x, y)) != b.plus(phi(x), phi(y)) || phi(a.circ(x, y)) != b.circ(phi(x), phi(y))) {
          throw Error(errc::internal_consistency, "brace isomorphism witness fails re-verification");
        }
      }
    }
  }
  return found;
}

/// Brace from a positional bijective 1-cocycle: element j carries the
/// additive structure of `additive` and the multiplicative structure of
/// `acting`, i.e. a_i ∘ a_j = a_k where g_i g_j = g_k.
inline SkewBrace from_cocycle(const CayleyGroup& acting, const CayleyGroup& additive) {
  if (acting.order() != additive.order()) {
    throw Error(errc::malformed_record, "cocycle between groups of different orders");
  }
  try {
    return SkewBrace::validate(additive, acting);
  } catch (const Error& e) {
    if (e.code() == errc::brace_law) throw Error(errc::malformed_record, e.what(), e.witness());
    throw;
  }
}

/// Componentwise operations; element (x, y) has index x * |B| + y.
inline SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return SkewBrace::validate(direct_product(a.additive(), b.additive()),
                             direct_product(a.multiplicative(), b.multiplicative()));
}

}  // namespace skewbrace
