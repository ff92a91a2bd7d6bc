#include "gpd/core.hpp"

#include <algorithm>
#include <set>

namespace gpd {

std::string_view law_name(Law law) {
  switch (law) {
    case Law::DuplicateName: return "DuplicateName";
    case Law::BadReference: return "BadReference";
    case Law::MissingIdentity: return "MissingIdentity";
    case Law::MissingInverse: return "MissingInverse";
    case Law::DuplicateAssignment: return "DuplicateAssignment";
    case Law::MissingComposite: return "MissingComposite";
    case Law::BadEndpoints: return "BadEndpoints";
    case Law::AssociativityViolation: return "AssociativityViolation";
    case Law::IdentityViolation: return "IdentityViolation";
    case Law::InverseViolation: return "InverseViolation";
    case Law::NotTotal: return "NotTotal";
    case Law::EndpointMismatch: return "EndpointMismatch";
    case Law::CompositionViolation: return "CompositionViolation";
    case Law::NotWide: return "NotWide";
    case Law::NotClosedUnderComposition: return "NotClosedUnderComposition";
    case Law::NotClosedUnderInverse: return "NotClosedUnderInverse";
  }
  return "Unknown";
}

const Object& Groupoid::object(ObjId x) const {
  if (x >= objects_.size())
    throw Error(ErrorCode::UnknownRef,
                "unknown object id " + std::to_string(x));
  return objects_[x];
}

const Morphism& Groupoid::morphism(MorId f) const {
  if (f >= morphisms_.size())
    throw Error(ErrorCode::UnknownRef,
                "unknown morphism id " + std::to_string(f));
  return morphisms_[f];
}

std::optional<ObjId> Groupoid::object_named(std::string_view name) const {
  auto it = object_names_.find(std::string(name));
  if (it == object_names_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> Groupoid::morphism_named(std::string_view name) const {
  auto it = morphism_names_.find(std::string(name));
  if (it == morphism_names_.end()) return std::nullopt;
  return it->second;
}

MorId Groupoid::identity(ObjId x) const {
  object(x);
  return identity_[x];
}

MorId Groupoid::inverse(MorId f) const {
  morphism(f);
  return inverse_[f];
}

bool Groupoid::composable(MorId g, MorId f) const {
  return morphism(g).source == morphism(f).target;
}

MorId Groupoid::compose(MorId g, MorId f) const {
  const Morphism& mg = morphism(g);
  const Morphism& mf = morphism(f);
  if (mg.source != mf.target)
    throw Error(ErrorCode::NotComposable,
                "cannot compose " + mg.name + " after " + mf.name +
                    ": source of the outer morphism is " +
                    objects_[mg.source].name + " but target of the inner is " +
                    objects_[mf.target].name);
  return table_[g][in_pos_[f]];
}

const std::vector<MorId>& Groupoid::morphisms_into(ObjId x) const {
  object(x);
  return in_[x];
}

const std::vector<MorId>& Groupoid::morphisms_out_of(ObjId x) const {
  object(x);
  return out_[x];
}

std::vector<MorId> Groupoid::hom_set(ObjId from, ObjId to) const {
  std::vector<MorId> result;
  for (MorId f : morphisms_out_of(from))
    if (morphisms_[f].target == to) result.push_back(f);
  return result;
}

GroupoidData Groupoid::to_data() const {
  GroupoidData data;
  data.objects = objects_;
  data.morphisms = morphisms_;
  for (ObjId x = 0; x < objects_.size(); ++x)
    data.identities.emplace_back(x, identity_[x]);
  for (MorId f = 0; f < morphisms_.size(); ++f)
    data.inverses.emplace_back(f, inverse_[f]);
  for (MorId g = 0; g < morphisms_.size(); ++g)
    for (MorId f : in_[morphisms_[g].source])
      data.composites.push_back({g, f, table_[g][in_pos_[f]]});
  return data;
}

bool Groupoid::operator==(const Groupoid& other) const {
  if (this == &other) return true;
  if (objects_.size() != other.objects_.size() ||
      morphisms_.size() != other.morphisms_.size())
    return false;
  for (ObjId x = 0; x < objects_.size(); ++x)
    if (objects_[x].name != other.objects_[x].name) return false;
  for (MorId f = 0; f < morphisms_.size(); ++f) {
    const Morphism& a = morphisms_[f];
    const Morphism& b = other.morphisms_[f];
    if (a.name != b.name || a.source != b.source || a.target != b.target)
      return false;
  }
  if (identity_ != other.identity_ || inverse_ != other.inverse_)
    return false;
  for (MorId g = 0; g < morphisms_.size(); ++g)
    for (MorId f : in_[morphisms_[g].source])
      if (table_[g][in_pos_[f]] != other.table_[g][other.in_pos_[f]])
        return false;
  return true;
}

namespace {

std::string mor_label(const GroupoidData& data, MorId f) {
  if (f < data.morphisms.size()) return data.morphisms[f].name;
  return "#" + std::to_string(f);
}

std::string obj_label(const GroupoidData& data, ObjId x) {
  if (x < data.objects.size()) return data.objects[x].name;
  return "#" + std::to_string(x);
}

}  // namespace

GroupoidValidation Groupoid::validate(const GroupoidData& data) {
  GroupoidValidation result;
  auto& out = result.violations;
  const std::size_t nobj = data.objects.size();
  const std::size_t nmor = data.morphisms.size();

  auto report = [&out](Law law, std::string message, std::vector<MorId> ms = {},
                       std::vector<ObjId> xs = {}) {
    out.push_back({law, std::move(message), std::move(ms), std::move(xs)});
  };

  {
    std::set<std::string> seen;
    for (const Object& x : data.objects)
      if (!seen.insert(x.name).second)
        report(Law::DuplicateName, "duplicate object name '" + x.name + "'",
               {}, {x.id});
    seen.clear();
    for (const Morphism& f : data.morphisms)
      if (!seen.insert(f.name).second)
        report(Law::DuplicateName, "duplicate morphism name '" + f.name + "'",
               {f.id});
  }

  bool refs_ok = true;
  for (MorId f = 0; f < nmor; ++f) {
    const Morphism& m = data.morphisms[f];
    if (m.source >= nobj || m.target >= nobj) {
      report(Law::BadReference,
             "morphism '" + m.name + "' has out-of-range endpoints", {f});
      refs_ok = false;
    }
  }
  if (!refs_ok) return result;  // endpoint lists are unusable below

  // Identity assignment, one per object.
  std::vector<MorId> id_of(nobj, kNone);
  for (auto [x, m] : data.identities) {
    if (x >= nobj || m >= nmor) {
      report(Law::BadReference, "identity assignment out of range", {}, {});
      continue;
    }
    if (id_of[x] != kNone) {
      report(Law::DuplicateAssignment,
             "object '" + obj_label(data, x) + "' has two identities", {m},
             {x});
      continue;
    }
    id_of[x] = m;
    const Morphism& mm = data.morphisms[m];
    if (mm.source != x || mm.target != x)
      report(Law::IdentityViolation,
             "identity of '" + obj_label(data, x) + "' is '" + mm.name +
                 "' which is not a loop at it",
             {m}, {x});
  }
  for (ObjId x = 0; x < nobj; ++x)
    if (id_of[x] == kNone)
      report(Law::MissingIdentity,
             "object '" + obj_label(data, x) + "' has no identity", {}, {x});

  // Inverse assignment, one per morphism.
  std::vector<MorId> inv(nmor, kNone);
  for (auto [f, g] : data.inverses) {
    if (f >= nmor || g >= nmor) {
      report(Law::BadReference, "inverse assignment out of range");
      continue;
    }
    if (inv[f] != kNone) {
      report(Law::DuplicateAssignment,
             "morphism '" + mor_label(data, f) + "' has two inverses", {f});
      continue;
    }
    inv[f] = g;
  }
  for (MorId f = 0; f < nmor; ++f)
    if (inv[f] == kNone)
      report(Law::MissingInverse,
             "morphism '" + mor_label(data, f) + "' has no inverse", {f});

  // In/out adjacency and position of each morphism in its in-list.
  std::vector<std::vector<MorId>> in(nobj), outl(nobj);
  for (MorId f = 0; f < nmor; ++f) {
    in[data.morphisms[f].target].push_back(f);
    outl[data.morphisms[f].source].push_back(f);
  }
  std::vector<std::uint32_t> in_pos(nmor, 0);
  for (ObjId x = 0; x < nobj; ++x)
    for (std::uint32_t i = 0; i < in[x].size(); ++i) in_pos[in[x][i]] = i;

  // Composition table, checked entry by entry.
  std::vector<std::vector<MorId>> table(nmor);
  for (MorId g = 0; g < nmor; ++g)
    table[g].assign(in[data.morphisms[g].source].size(), kNone);

  for (const auto& entry : data.composites) {
    MorId g = entry[0], f = entry[1], h = entry[2];
    if (g >= nmor || f >= nmor || h >= nmor) {
      report(Law::BadReference, "composition entry out of range");
      continue;
    }
    const Morphism& mg = data.morphisms[g];
    const Morphism& mf = data.morphisms[f];
    const Morphism& mh = data.morphisms[h];
    if (mg.source != mf.target) {
      report(Law::BadEndpoints,
             "table entry " + mg.name + "∘" + mf.name +
                 " given although the pair is not composable",
             {g, f});
      continue;
    }
    if (table[g][in_pos[f]] != kNone) {
      report(Law::DuplicateAssignment,
             "composite " + mg.name + "∘" + mf.name + " assigned twice",
             {g, f});
      continue;
    }
    table[g][in_pos[f]] = h;
    if (mh.source != mf.source || mh.target != mg.target)
      report(Law::BadEndpoints,
             "composite " + mg.name + "∘" + mf.name + " = " + mh.name +
                 " has wrong endpoints",
             {g, f, h});
  }

  // Totality on exactly the composable pairs.
  for (MorId g = 0; g < nmor; ++g)
    for (MorId f : in[data.morphisms[g].source])
      if (table[g][in_pos[f]] == kNone)
        report(Law::MissingComposite,
               "no composite for " + mor_label(data, g) + "∘" +
                   mor_label(data, f),
               {g, f});

  auto comp = [&](MorId g, MorId f) -> MorId {
    if (data.morphisms[g].source != data.morphisms[f].target) return kNone;
    return table[g][in_pos[f]];
  };

  // Identity laws.
  for (MorId f = 0; f < nmor; ++f) {
    const Morphism& mf = data.morphisms[f];
    MorId idt = id_of[mf.target];
    MorId ids = id_of[mf.source];
    if (idt != kNone) {
      MorId left = comp(idt, f);
      if (left != kNone && left != f)
        report(Law::IdentityViolation,
               "id∘" + mf.name + " = " + mor_label(data, left) +
                   ", expected " + mf.name,
               {f, left});
    }
    if (ids != kNone) {
      MorId right = comp(f, ids);
      if (right != kNone && right != f)
        report(Law::IdentityViolation,
               mf.name + "∘id = " + mor_label(data, right) + ", expected " +
                   mf.name,
               {f, right});
    }
  }

  // Inverse laws.
  for (MorId f = 0; f < nmor; ++f) {
    if (inv[f] == kNone) continue;
    const Morphism& mf = data.morphisms[f];
    const Morphism& mi = data.morphisms[inv[f]];
    if (mi.source != mf.target || mi.target != mf.source) {
      report(Law::InverseViolation,
             "inverse of " + mf.name + " is " + mi.name +
                 " whose endpoints do not match",
             {f, inv[f]});
      continue;
    }
    MorId left = comp(inv[f], f);
    if (left != kNone && left != id_of[mf.source])
      report(Law::InverseViolation,
             mi.name + "∘" + mf.name + " = " + mor_label(data, left) +
                 ", expected the identity",
             {f, inv[f]});
    MorId right = comp(f, inv[f]);
    if (right != kNone && right != id_of[mf.target])
      report(Law::InverseViolation,
             mf.name + "∘" + mi.name + " = " + mor_label(data, right) +
                 ", expected the identity",
             {f, inv[f]});
  }

  // Associativity over every composable triple.
  for (MorId g = 0; g < nmor; ++g) {
    for (MorId f : in[data.morphisms[g].source]) {
      MorId gf = table[g][in_pos[f]];
      if (gf == kNone) continue;
      for (MorId e : in[data.morphisms[f].source]) {
        MorId fe = table[f][in_pos[e]];
        if (fe == kNone) continue;
        MorId l = comp(gf, e);
        MorId r = comp(g, fe);
        if (l != kNone && r != kNone && l != r)
          report(Law::AssociativityViolation,
                 "(" + mor_label(data, g) + "∘" + mor_label(data, f) + ")∘" +
                     mor_label(data, e) + " = " + mor_label(data, l) +
                     " but " + mor_label(data, g) + "∘(" +
                     mor_label(data, f) + "∘" + mor_label(data, e) + ") = " +
                     mor_label(data, r),
                 {g, f, e});
      }
    }
  }

  if (!out.empty()) return result;

  Groupoid g;
  g.objects_ = data.objects;
  g.morphisms_ = data.morphisms;
  for (ObjId x = 0; x < nobj; ++x) g.objects_[x].id = x;
  for (MorId f = 0; f < nmor; ++f) g.morphisms_[f].id = f;
  g.identity_ = std::move(id_of);
  g.inverse_ = std::move(inv);
  g.in_ = std::move(in);
  g.out_ = std::move(outl);
  g.in_pos_ = std::move(in_pos);
  g.table_ = std::move(table);
  for (ObjId x = 0; x < nobj; ++x) g.object_names_[g.objects_[x].name] = x;
  for (MorId f = 0; f < nmor; ++f) g.morphism_names_[g.morphisms_[f].name] = f;
  result.groupoid = std::move(g);
  return result;
}

ComponentResult connected_component(const Groupoid& g, ObjId x) {
  g.object(x);
  const std::size_t nobj = g.object_count();
  const std::size_t nmor = g.morphism_count();

  // Objects linked to x are exactly the sources of morphisms into x.
  std::vector<bool> in_comp(nobj, false);
  for (MorId f : g.morphisms_into(x)) in_comp[g.source(f)] = true;

  ComponentResult result;
  result.parent_object_to_component.assign(nobj, kNone);
  result.parent_morphism_to_component.assign(nmor, kNone);

  GroupoidData data;
  for (ObjId y = 0; y < nobj; ++y) {
    if (!in_comp[y]) continue;
    result.parent_object_to_component[y] =
        static_cast<ObjId>(result.object_to_parent.size());
    result.object_to_parent.push_back(y);
    data.objects.push_back(
        {static_cast<ObjId>(data.objects.size()), g.object(y).name});
  }
  for (MorId f = 0; f < nmor; ++f) {
    const Morphism& m = g.morphism(f);
    if (!in_comp[m.source] || !in_comp[m.target]) continue;
    result.parent_morphism_to_component[f] =
        static_cast<MorId>(result.morphism_to_parent.size());
    result.morphism_to_parent.push_back(f);
    data.morphisms.push_back({static_cast<MorId>(data.morphisms.size()),
                              m.name,
                              result.parent_object_to_component[m.source],
                              result.parent_object_to_component[m.target]});
  }
  for (ObjId y : result.object_to_parent)
    data.identities.emplace_back(
        result.parent_object_to_component[y],
        result.parent_morphism_to_component[g.identity(y)]);
  for (MorId f : result.morphism_to_parent)
    data.inverses.emplace_back(
        result.parent_morphism_to_component[f],
        result.parent_morphism_to_component[g.inverse(f)]);
  for (MorId a : result.morphism_to_parent)
    for (MorId b : result.morphism_to_parent)
      if (g.composable(a, b))
        data.composites.push_back({result.parent_morphism_to_component[a],
                                   result.parent_morphism_to_component[b],
                                   result.parent_morphism_to_component[
                                       g.compose(a, b)]});

  GroupoidValidation v = Groupoid::validate(data);
  if (!v.ok())
    throw Error(ErrorCode::Internal,
                "connected component failed validation: " +
                    v.violations.front().message);
  result.component = std::make_shared<const Groupoid>(std::move(*v.groupoid));
  return result;
}

bool SubgroupoidSelection::contains(MorId f) const {
  return std::binary_search(morphisms.begin(), morphisms.end(), f);
}

SubgroupoidCheck is_wide_closed_subgroupoid(const Groupoid& g,
                                            std::vector<MorId> morphisms) {
  SubgroupoidCheck result;
  auto& out = result.violations;

  std::sort(morphisms.begin(), morphisms.end());
  morphisms.erase(std::unique(morphisms.begin(), morphisms.end()),
                  morphisms.end());
  for (MorId f : morphisms) g.morphism(f);  // throws UnknownRef

  std::vector<bool> member(g.morphism_count(), false);
  for (MorId f : morphisms) member[f] = true;

  for (ObjId x = 0; x < g.object_count(); ++x)
    if (!member[g.identity(x)])
      out.push_back({Law::NotWide,
                     "selection misses the identity of object '" +
                         g.object(x).name + "'",
                     {},
                     {x}});
  for (MorId f : morphisms)
    if (!member[g.inverse(f)])
      out.push_back({Law::NotClosedUnderInverse,
                     "selection contains '" + g.morphism(f).name +
                         "' but not its inverse",
                     {f}});
  for (MorId a : morphisms)
    for (MorId b : morphisms)
      if (g.composable(a, b) && !member[g.compose(a, b)])
        out.push_back({Law::NotClosedUnderComposition,
                       "selection contains '" + g.morphism(a).name +
                           "' and '" + g.morphism(b).name +
                           "' but not their composite",
                       {a, b}});

  if (out.empty()) result.selection = SubgroupoidSelection{std::move(morphisms)};
  return result;
}

SubgroupoidSelection identity_subgroupoid(const Groupoid& g) {
  SubgroupoidSelection s;
  for (ObjId x = 0; x < g.object_count(); ++x)
    s.morphisms.push_back(g.identity(x));
  std::sort(s.morphisms.begin(), s.morphisms.end());
  return s;
}

SubgroupoidSelection full_subgroupoid(const Groupoid& g) {
  SubgroupoidSelection s;
  s.morphisms.resize(g.morphism_count());
  for (MorId f = 0; f < g.morphism_count(); ++f) s.morphisms[f] = f;
  return s;
}

}  // namespace gpd
