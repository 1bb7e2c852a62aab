#pragma once

// One representative of every isomorphism class of groups of order 1..16,
// built from explicit constructions, and the descriptor used to name groups.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skewbrace/group.hpp"

namespace skewbrace {

inline constexpr std::size_t kCatalogMaxOrder = 16;

struct CatalogEntry {
  std::string name;
  CayleyGroup group;
};

namespace detail {

inline std::vector<std::vector<CatalogEntry>> build_catalog() {
  std::vector<std::vector<CatalogEntry>> cat(kCatalogMaxOrder + 1);
  auto C = [](std::size_t n) { return cyclic_group(n); };
  auto add = [&](std::string name, CayleyGroup g) {
    cat[g.order()].push_back({std::move(name), std::move(g)});
  };
  auto c2 = C(2);
  auto c2c2 = direct_product(c2, c2);
  auto c4c2 = direct_product(C(4), c2);
  auto d4 = metacyclic_group(4, 2, 3, 0);
  auto q8 = metacyclic_group(4, 2, 3, 2);

  add("C1", C(1));
  add("C2", c2);
  add("C3", C(3));
  add("C4", C(4));
  add("C2xC2", c2c2);
  add("C5", C(5));
  add("C6", C(6));
  add("S3", metacyclic_group(3, 2, 2, 0));
  add("C7", C(7));
  add("C8", C(8));
  add("C4xC2", c4c2);
  add("C2xC2xC2", direct_product(c2c2, c2));
  add("D4", d4);
  add("Q8", q8);
  add("C9", C(9));
  add("C3xC3", direct_product(C(3), C(3)));
  add("C10", C(10));
  add("D5", metacyclic_group(5, 2, 4, 0));
  add("C11", C(11));
  add("C12", C(12));
  add("C6xC2", direct_product(C(6), c2));
  add("D6", metacyclic_group(6, 2, 5, 0));
  add("C3:C4", metacyclic_group(3, 4, 2, 0));
  {
    // C3 permutes the three involutions of C2xC2 cyclically.
    auto t = Permutation::from_images({0, 2, 3, 1});
    std::array<Permutation, 3> action{Permutation::identity(4), t, compose(t, t)};
    add("A4", semidirect_product(c2c2, C(3), action));
  }
  add("C13", C(13));
  add("C14", C(14));
  add("D7", metacyclic_group(7, 2, 6, 0));
  add("C15", C(15));
  add("C16", C(16));
  add("C4xC4", direct_product(C(4), C(4)));
  {
    // On C4xC2 = <x> x <y> (index 2i + j for x^i y^j): x -> xy, y -> y.
    std::vector<Permutation::point_type> img(8);
    for (Element i = 0; i < 4; ++i)
      for (Element j = 0; j < 2; ++j) img[i * 2 + j] = i * 2 + (i + j) % 2;
    std::array<Permutation, 2> action{Permutation::identity(8), Permutation::from_images(img)};
    add("(C4xC2):C2", semidirect_product(c4c2, c2, action));
  }
  add("C4:C4", metacyclic_group(4, 4, 3, 0));
  add("C8xC2", direct_product(C(8), c2));
  add("M16", metacyclic_group(8, 2, 5, 0));
  add("D8", metacyclic_group(8, 2, 7, 0));
  add("QD16", metacyclic_group(8, 2, 3, 0));
  add("Q16", metacyclic_group(8, 2, 7, 4));
  add("C4xC2xC2", direct_product(c4c2, c2));
  add("C2xD4", direct_product(c2, d4));
  add("C2xQ8", direct_product(c2, q8));
  {
    // On C4xC2: x -> x, y -> x^2 y, giving the central product C4 o D4.
    std::vector<Permutation::point_type> img(8);
    for (Element i = 0; i < 4; ++i)
      for (Element j = 0; j < 2; ++j) img[i * 2 + j] = ((i + 2 * j) % 4) * 2 + j;
    std::array<Permutation, 2> action{Permutation::identity(8), Permutation::from_images(img)};
    add("C4oD4", semidirect_product(c4c2, c2, action));
  }
  add("C2^4", direct_product(c2c2, c2c2));
  return cat;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog_entries(std::size_t n) {
  static const std::vector<std::vector<CatalogEntry>> catalog = detail::build_catalog();
  if (n < 1 || n > kCatalogMaxOrder) {
    throw Error(errc::out_of_range, "catalog covers orders 1.." + std::to_string(kCatalogMaxOrder));
  }
  return catalog[n];
}

inline std::vector<CayleyGroup> catalog_groups(std::size_t n) {
  std::vector<CayleyGroup> out;
  for (const auto& e : catalog_entries(n)) out.push_back(e.group);
  return out;
}

struct GroupDescriptor {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::size_t> element_orders;  // sorted
  std::size_t center_size = 0;
  std::optional<std::size_t> catalog_id;
  std::string name;  // catalog name, or a structural fallback

  std::string key() const {
    std::string k = std::to_string(order) + (abelian ? "a" : "n") + std::to_string(center_size) + "[";
    for (auto o : element_orders) k += std::to_string(o) + ".";
    return k + "]";
  }
  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.order == b.order && a.abelian == b.abelian && a.element_orders == b.element_orders &&
           a.center_size == b.center_size && a.catalog_id == b.catalog_id;
  }
};

inline GroupDescriptor describe_group(const CayleyGroup& g) {
  GroupDescriptor d;
  d.order = g.order();
  d.abelian = g.is_abelian();
  for (Element x = 0; x < g.order(); ++x) d.element_orders.push_back(g.element_order(x));
  std::sort(d.element_orders.begin(), d.element_orders.end());
  d.center_size = center(g).size();
  if (g.order() <= kCatalogMaxOrder) {
    const auto& entries = catalog_entries(g.order());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& h = entries[i].group;
      if (h.is_abelian() != d.abelian || center(h).size() != d.center_size) continue;
      if (are_isomorphic_groups(g, h)) {
        d.catalog_id = i;
        d.name = entries[i].name;
        break;
      }
    }
  }
  if (d.name.empty()) d.name = "G" + d.key();
  return d;
}

}  // namespace skewbrace
