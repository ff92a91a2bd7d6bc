#include "gpd/builders.hpp"

#include <algorithm>
#include <set>

namespace gpd {

namespace {

Groupoid must_validate(GroupoidData data, const char* what) {
  GroupoidValidation v = Groupoid::validate(data);
  if (!v.ok())
    throw Error(ErrorCode::Internal, std::string(what) +
                                         " failed validation: " +
                                         v.violations.front().message);
  return std::move(*v.groupoid);
}

}  // namespace

bool is_group_table(const CayleyTable& table, std::string* why) {
  auto fail = [why](std::string message) {
    if (why) *why = std::move(message);
    return false;
  };
  const std::size_t n = table.order();
  if (n == 0) return fail("table is empty");
  if (table.product.size() != n) return fail("table is not square");
  for (const auto& row : table.product) {
    if (row.size() != n) return fail("table is not square");
    for (std::size_t v : row)
      if (v >= n) return fail("table entry out of range");
  }
  {
    std::set<std::string> names(table.element_names.begin(),
                                table.element_names.end());
    if (names.size() != n) return fail("element names are not unique");
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table.product[i][j] != j || table.product[j][i] != j) ok = false;
    if (ok) {
      e = i;
      break;
    }
  }
  if (e == n) return fail("no identity element");
  for (std::size_t i = 0; i < n; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j)
      if (table.product[i][j] == e && table.product[j][i] == e)
        has_inverse = true;
    if (!has_inverse)
      return fail("element '" + table.element_names[i] + "' has no inverse");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table.product[table.product[i][j]][k] !=
            table.product[i][table.product[j][k]])
          return fail("table is not associative at (" +
                      table.element_names[i] + "," + table.element_names[j] +
                      "," + table.element_names[k] + ")");
  return true;
}

Groupoid one_object_from_table(const CayleyTable& table,
                               const std::string& object_name) {
  std::string why;
  if (!is_group_table(table, &why))
    throw Error(ErrorCode::InvalidCayleyTable, "not a group table: " + why);
  const std::size_t n = table.order();

  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table.product[i][j] != j) ok = false;
    if (ok) e = i;
  }

  GroupoidData data;
  data.objects.push_back({0, object_name});
  for (std::size_t i = 0; i < n; ++i)
    data.morphisms.push_back(
        {static_cast<MorId>(i), table.element_names[i], 0, 0});
  data.identities.emplace_back(0, static_cast<MorId>(e));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table.product[j][i] == e && table.product[i][j] == e) {
        data.inverses.emplace_back(static_cast<MorId>(i),
                                   static_cast<MorId>(j));
        break;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      data.composites.push_back({static_cast<MorId>(i), static_cast<MorId>(j),
                                 static_cast<MorId>(table.product[i][j])});
  return must_validate(std::move(data), "one_object_from_table");
}

Groupoid pair_groupoid(std::size_t n) {
  if (n == 0)
    throw Error(ErrorCode::UnknownRef, "pair groupoid needs >= 1 object");
  GroupoidData data;
  for (std::size_t i = 0; i < n; ++i)
    data.objects.push_back(
        {static_cast<ObjId>(i), "O" + std::to_string(i + 1)});
  // Morphism i*n+j goes from Oi+1 to Oj+1.
  auto mor = [n](std::size_t i, std::size_t j) {
    return static_cast<MorId>(i * n + j);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string name = i == j ? "id_O" + std::to_string(i + 1)
                                : "p" + std::to_string(i + 1) + "_" +
                                      std::to_string(j + 1);
      data.morphisms.push_back({mor(i, j), std::move(name),
                                static_cast<ObjId>(i), static_cast<ObjId>(j)});
    }
  for (std::size_t i = 0; i < n; ++i)
    data.identities.emplace_back(static_cast<ObjId>(i), mor(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      data.inverses.emplace_back(mor(i, j), mor(j, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        data.composites.push_back({mor(j, k), mor(i, j), mor(i, k)});
  return must_validate(std::move(data), "pair_groupoid");
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  for (ObjId x = 0; x < b.object_count(); ++x)
    if (a.object_named(b.object(x).name))
      throw Error(ErrorCode::NameClash,
                  "both groupoids declare object '" + b.object(x).name + "'");
  for (MorId f = 0; f < b.morphism_count(); ++f)
    if (a.morphism_named(b.morphism(f).name))
      throw Error(ErrorCode::NameClash, "both groupoids declare morphism '" +
                                            b.morphism(f).name + "'");

  GroupoidData data = a.to_data();
  const ObjId oshift = static_cast<ObjId>(a.object_count());
  const MorId mshift = static_cast<MorId>(a.morphism_count());
  GroupoidData bd = b.to_data();
  for (const Object& x : bd.objects)
    data.objects.push_back({x.id + oshift, x.name});
  for (const Morphism& f : bd.morphisms)
    data.morphisms.push_back(
        {f.id + mshift, f.name, f.source + oshift, f.target + oshift});
  for (auto [x, m] : bd.identities)
    data.identities.emplace_back(x + oshift, m + mshift);
  for (auto [f, g] : bd.inverses)
    data.inverses.emplace_back(f + mshift, g + mshift);
  for (const auto& c : bd.composites)
    data.composites.push_back({c[0] + mshift, c[1] + mshift, c[2] + mshift});
  return must_validate(std::move(data), "disjoint_union");
}

Groupoid direct_product(const Groupoid& a, const Groupoid& b) {
  GroupoidData data;
  const std::size_t bo = b.object_count();
  const std::size_t bm = b.morphism_count();
  auto obj = [bo](ObjId x, ObjId y) { return static_cast<ObjId>(x * bo + y); };
  auto mor = [bm](MorId f, MorId g) { return static_cast<MorId>(f * bm + g); };

  for (ObjId x = 0; x < a.object_count(); ++x)
    for (ObjId y = 0; y < bo; ++y)
      data.objects.push_back(
          {obj(x, y), "(" + a.object(x).name + "|" + b.object(y).name + ")"});
  for (MorId f = 0; f < a.morphism_count(); ++f)
    for (MorId g = 0; g < bm; ++g)
      data.morphisms.push_back(
          {mor(f, g), "(" + a.morphism(f).name + "|" + b.morphism(g).name + ")",
           obj(a.source(f), b.source(g)), obj(a.target(f), b.target(g))});
  for (ObjId x = 0; x < a.object_count(); ++x)
    for (ObjId y = 0; y < bo; ++y)
      data.identities.emplace_back(obj(x, y),
                                   mor(a.identity(x), b.identity(y)));
  for (MorId f = 0; f < a.morphism_count(); ++f)
    for (MorId g = 0; g < bm; ++g)
      data.inverses.emplace_back(mor(f, g), mor(a.inverse(f), b.inverse(g)));
  for (MorId f2 = 0; f2 < a.morphism_count(); ++f2)
    for (MorId g2 = 0; g2 < bm; ++g2)
      for (MorId f1 = 0; f1 < a.morphism_count(); ++f1) {
        if (!a.composable(f2, f1)) continue;
        for (MorId g1 = 0; g1 < bm; ++g1) {
          if (!b.composable(g2, g1)) continue;
          data.composites.push_back({mor(f2, g2), mor(f1, g1),
                                     mor(a.compose(f2, f1),
                                         b.compose(g2, g1))});
        }
      }
  return must_validate(std::move(data), "direct_product");
}

Groupoid with_name_prefix(const Groupoid& g, const std::string& prefix) {
  GroupoidData data = g.to_data();
  for (Object& x : data.objects) x.name = prefix + x.name;
  for (Morphism& f : data.morphisms) f.name = prefix + f.name;
  return must_validate(std::move(data), "with_name_prefix");
}

CayleyTable cyclic_table(std::size_t n) {
  CayleyTable t;
  for (std::size_t i = 0; i < n; ++i)
    t.element_names.push_back(i == 0   ? "e"
                              : i == 1 ? "a"
                                       : "a" + std::to_string(i));
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.product[i][j] = (i + j) % n;
  return t;
}

CayleyTable klein_four_table() {
  CayleyTable t;
  t.element_names = {"e", "x", "y", "xy"};
  t.product.assign(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t.product[i][j] = i ^ j;
  return t;
}

namespace {

using Perm = std::vector<std::size_t>;

Perm perm_compose(const Perm& second, const Perm& first) {
  Perm r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

CayleyTable table_from_perms(std::vector<std::string> names,
                             std::vector<Perm> perms) {
  CayleyTable t;
  t.element_names = std::move(names);
  const std::size_t n = perms.size();
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Perm p = perm_compose(perms[i], perms[j]);
      auto it = std::find(perms.begin(), perms.end(), p);
      t.product[i][j] = static_cast<std::size_t>(it - perms.begin());
    }
  return t;
}

}  // namespace

CayleyTable symmetric3_table() {
  return table_from_perms({"e", "r", "r2", "s", "sr", "sr2"},
                          {{0, 1, 2},
                           {1, 2, 0},
                           {2, 0, 1},
                           {1, 0, 2},
                           {0, 2, 1},
                           {2, 1, 0}});
}

CayleyTable dihedral_table(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Perm> perms;
  Perm rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  Perm cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(k == 0 ? "e" : k == 1 ? "r" : "r" + std::to_string(k));
    perms.push_back(cur);
    cur = perm_compose(rot, cur);
  }
  for (std::size_t i = 0; i < n; ++i) cur[i] = i;
  cur = perm_compose(cur, refl);
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(k == 0 ? "s" : k == 1 ? "rs" : "r" + std::to_string(k) + "s");
    perms.push_back(cur);
    cur = perm_compose(rot, cur);
  }
  return table_from_perms(std::move(names), std::move(perms));
}

CayleyTable quaternion_table() {
  // Elements 1, -1, i, -i, j, -j, k, -k encoded as unit*2 + sign bit,
  // with names e m i mi j mj k mk.
  CayleyTable t;
  t.element_names = {"e", "m", "i", "mi", "j", "mj", "k", "mk"};
  static const std::size_t unit_product[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const std::size_t unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  t.product.assign(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t u = unit_product[a / 2][b / 2];
      std::size_t s = (unit_sign[a / 2][b / 2] + a % 2 + b % 2) % 2;
      t.product[a][b] = u * 2 + s;
    }
  return t;
}

CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b) {
  CayleyTable t;
  const std::size_t nb = b.order();
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      t.element_names.push_back("(" + a.element_names[i] + "|" +
                                b.element_names[j] + ")");
  const std::size_t n = a.order() * nb;
  t.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i1 = 0; i1 < a.order(); ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < a.order(); ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          t.product[i1 * nb + j1][i2 * nb + j2] =
              a.product[i1][i2] * nb + b.product[j1][j2];
  return t;
}

const std::vector<CayleyTable>& small_group_catalog() {
  static const std::vector<CayleyTable> catalog = [] {
    std::vector<CayleyTable> c;
    for (std::size_t n = 1; n <= 8; ++n) c.push_back(cyclic_table(n));
    c.push_back(klein_four_table());
    c.push_back(symmetric3_table());
    c.push_back(dihedral_table(4));
    c.push_back(quaternion_table());
    c.push_back(direct_product_table(cyclic_table(2), cyclic_table(4)));
    c.push_back(direct_product_table(cyclic_table(2),
                                     direct_product_table(cyclic_table(2),
                                                          cyclic_table(2))));
    for (const CayleyTable& t : c) {
      std::string why;
      if (!is_group_table(t, &why))
        throw Error(ErrorCode::Internal, "catalog table broken: " + why);
    }
    return c;
  }();
  return catalog;
}

std::size_t random_index(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

Groupoid random_groupoid(std::mt19937_64& rng,
                         const RandomGroupoidOptions& options) {
  std::vector<const CayleyTable*> pool;
  for (const CayleyTable& t : small_group_catalog())
    if (t.order() >= options.min_group_order &&
        t.order() <= options.max_group_order)
      pool.push_back(&t);
  if (pool.empty())
    throw Error(ErrorCode::UnknownRef, "no catalog group in requested range");

  auto component = [&](const std::string& prefix) {
    const CayleyTable& t = *pool[random_index(rng, pool.size())];
    std::size_t n = 1 + random_index(rng, options.max_pair_objects);
    Groupoid g = direct_product(one_object_from_table(t, "s"),
                                pair_groupoid(n));
    return prefix.empty() ? g : with_name_prefix(g, prefix);
  };

  if (options.allow_disjoint_union && rng() % 2 == 0)
    return disjoint_union(component("A."), component("B."));
  return component("");
}

}  // namespace gpd
