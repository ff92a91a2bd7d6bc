#ifndef GPD_BUILDERS_HPP
#define GPD_BUILDERS_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "gpd/core.hpp"

namespace gpd {

/// Multiplication table of a finite group.  product[i][j] is the index of
/// i∘j with j applied first, matching the composition convention of
/// Groupoid::compose.
struct CayleyTable {
  std::vector<std::string> element_names;
  std::vector<std::vector<std::size_t>> product;

  std::size_t order() const { return element_names.size(); }
};

/// Checks the group axioms on a table; on failure `why` (when given)
/// receives a description of the first problem found.
bool is_group_table(const CayleyTable& table, std::string* why = nullptr);

/// One-object groupoid from a group table.  Throws InvalidCayleyTable.
Groupoid one_object_from_table(const CayleyTable& table,
                               const std::string& object_name = "*");

/// n objects O1..On with exactly one morphism between any ordered pair.
Groupoid pair_groupoid(std::size_t n);

/// Throws NameClash when the two groupoids share an object or morphism name.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

Groupoid direct_product(const Groupoid& a, const Groupoid& b);

/// Copy with every object and morphism name prefixed.
Groupoid with_name_prefix(const Groupoid& g, const std::string& prefix);

CayleyTable cyclic_table(std::size_t n);
CayleyTable klein_four_table();
CayleyTable symmetric3_table();
CayleyTable dihedral_table(std::size_t n);  // order 2n
CayleyTable quaternion_table();
CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b);

/// Every group of order at most 8, up to isomorphism.
const std::vector<CayleyTable>& small_group_catalog();

struct RandomGroupoidOptions {
  std::size_t min_group_order = 1;
  std::size_t max_group_order = 8;
  std::size_t max_pair_objects = 4;
  bool allow_disjoint_union = true;
};

/// Group-times-pair-groupoid instances, optionally as a two-component
/// disjoint union.  Deterministic for a given rng state.
Groupoid random_groupoid(std::mt19937_64& rng,
                         const RandomGroupoidOptions& options = {});

/// Uniform draw from [0, n).  std::uniform_int_distribution is not
/// reproducible across standard libraries, this is.
std::size_t random_index(std::mt19937_64& rng, std::size_t n);

}  // namespace gpd

#endif  // GPD_BUILDERS_HPP
