#include "gpd/functor.hpp"

#include <algorithm>

namespace gpd {

ObjId GroupoidFunctor::map_object(ObjId x) const {
  if (x >= object_map_.size())
    throw Error(ErrorCode::UnknownRef,
                "unknown source object id " + std::to_string(x));
  return object_map_[x];
}

MorId GroupoidFunctor::map_morphism(MorId f) const {
  if (f >= morphism_map_.size())
    throw Error(ErrorCode::UnknownRef,
                "unknown source morphism id " + std::to_string(f));
  return morphism_map_[f];
}

bool GroupoidFunctor::operator==(const GroupoidFunctor& other) const {
  if (object_map_ != other.object_map_ ||
      morphism_map_ != other.morphism_map_)
    return false;
  if (source_ != other.source_ && !(*source_ == *other.source_)) return false;
  if (target_ != other.target_ && !(*target_ == *other.target_)) return false;
  return true;
}

FunctorValidation validate_functor(FunctorData data) {
  FunctorValidation result;
  auto& out = result.violations;
  if (!data.source || !data.target)
    throw Error(ErrorCode::UnknownRef, "functor endpoints missing");
  const Groupoid& src = *data.source;
  const Groupoid& tgt = *data.target;

  if (data.object_map.size() != src.object_count())
    out.push_back({Law::NotTotal,
                   "object map covers " +
                       std::to_string(data.object_map.size()) + " of " +
                       std::to_string(src.object_count()) + " objects",
                   {},
                   {}});
  if (data.morphism_map.size() != src.morphism_count())
    out.push_back({Law::NotTotal,
                   "morphism map covers " +
                       std::to_string(data.morphism_map.size()) + " of " +
                       std::to_string(src.morphism_count()) + " morphisms",
                   {},
                   {}});
  for (ObjId x = 0; x < data.object_map.size(); ++x)
    if (data.object_map[x] == kNone || data.object_map[x] >= tgt.object_count())
      out.push_back({Law::NotTotal,
                     "object '" + src.object(x).name + "' is unmapped",
                     {},
                     {x}});
  for (MorId f = 0; f < data.morphism_map.size(); ++f)
    if (data.morphism_map[f] == kNone ||
        data.morphism_map[f] >= tgt.morphism_count())
      out.push_back({Law::NotTotal,
                     "morphism '" + src.morphism(f).name + "' is unmapped",
                     {f}});
  if (!out.empty()) return result;

  for (MorId f = 0; f < src.morphism_count(); ++f) {
    const Morphism& m = src.morphism(f);
    const Morphism& im = tgt.morphism(data.morphism_map[f]);
    if (im.source != data.object_map[m.source] ||
        im.target != data.object_map[m.target])
      out.push_back({Law::EndpointMismatch,
                     "image of '" + m.name + "' is '" + im.name +
                         "' whose endpoints differ from the mapped ones",
                     {f}});
  }
  for (ObjId x = 0; x < src.object_count(); ++x)
    if (data.morphism_map[src.identity(x)] !=
        tgt.identity(data.object_map[x]))
      out.push_back({Law::IdentityViolation,
                     "identity of '" + src.object(x).name +
                         "' does not map to the identity of its image",
                     {src.identity(x)},
                     {x}});
  for (MorId g = 0; g < src.morphism_count(); ++g)
    for (MorId f : src.morphisms_into(src.source(g))) {
      MorId lhs = data.morphism_map[src.compose(g, f)];
      MorId ig = data.morphism_map[g];
      MorId iff = data.morphism_map[f];
      if (!tgt.composable(ig, iff) || tgt.compose(ig, iff) != lhs) {
        out.push_back({Law::CompositionViolation,
                       "F(" + src.morphism(g).name + "∘" +
                           src.morphism(f).name +
                           ") differs from F(" + src.morphism(g).name +
                           ")∘F(" + src.morphism(f).name + ")",
                       {g, f}});
      }
    }

  if (!out.empty()) return result;
  GroupoidFunctor fun;
  fun.source_ = std::move(data.source);
  fun.target_ = std::move(data.target);
  fun.object_map_ = std::move(data.object_map);
  fun.morphism_map_ = std::move(data.morphism_map);
  result.functor = std::move(fun);
  return result;
}

GroupoidFunctor identity_functor(GroupoidPtr g) {
  FunctorData data;
  data.source = g;
  data.target = g;
  data.object_map.resize(g->object_count());
  data.morphism_map.resize(g->morphism_count());
  for (ObjId x = 0; x < g->object_count(); ++x) data.object_map[x] = x;
  for (MorId f = 0; f < g->morphism_count(); ++f) data.morphism_map[f] = f;
  FunctorValidation v = validate_functor(std::move(data));
  if (!v.ok())
    throw Error(ErrorCode::Internal, "identity functor failed validation");
  return std::move(*v.functor);
}

GroupoidFunctor compose_functors(const GroupoidFunctor& outer,
                                 const GroupoidFunctor& inner) {
  if (inner.target() != outer.source() &&
      !(*inner.target() == *outer.source()))
    throw Error(ErrorCode::Mismatch,
                "functors do not share the middle groupoid");
  FunctorData data;
  data.source = inner.source();
  data.target = outer.target();
  for (ObjId x : inner.object_map())
    data.object_map.push_back(outer.map_object(x));
  for (MorId f : inner.morphism_map())
    data.morphism_map.push_back(outer.map_morphism(f));
  FunctorValidation v = validate_functor(std::move(data));
  if (!v.ok())
    throw Error(ErrorCode::Internal,
                "composite of validated functors failed validation: " +
                    v.violations.front().message);
  return std::move(*v.functor);
}

RestrictedFunctor restrict_to_component(const GroupoidFunctor& f, ObjId x) {
  RestrictedFunctor result;
  result.source_component = connected_component(*f.source(), x);
  result.target_component =
      connected_component(*f.target(), f.map_object(x));

  FunctorData data;
  data.source = result.source_component.component;
  data.target = result.target_component.component;
  for (ObjId y : result.source_component.object_to_parent) {
    ObjId image =
        result.target_component.parent_object_to_component[f.map_object(y)];
    if (image == kNone)
      throw Error(ErrorCode::Internal,
                  "image object escapes the target component");
    data.object_map.push_back(image);
  }
  for (MorId m : result.source_component.morphism_to_parent) {
    MorId image = result.target_component
                      .parent_morphism_to_component[f.map_morphism(m)];
    if (image == kNone)
      throw Error(ErrorCode::Internal,
                  "image morphism escapes the target component");
    data.morphism_map.push_back(image);
  }
  FunctorValidation v = validate_functor(std::move(data));
  if (!v.ok())
    throw Error(ErrorCode::Internal,
                "restriction failed validation: " +
                    v.violations.front().message);
  result.functor = std::move(*v.functor);
  return result;
}

FullAtResult is_full_at(const GroupoidFunctor& f, ObjId x) {
  const Groupoid& src = *f.source();
  const Groupoid& tgt = *f.target();
  ObjId fx = f.map_object(x);

  std::vector<bool> hit(tgt.morphism_count(), false);
  for (MorId loop : src.hom_set(x, x)) hit[f.map_morphism(loop)] = true;

  FullAtResult result;
  result.full_at = true;
  for (MorId loop : tgt.hom_set(fx, fx))
    if (!hit[loop]) {
      result.full_at = false;
      result.uncovered_loop = loop;
      break;
    }
  return result;
}

FullnessResult check_full(const GroupoidFunctor& f) {
  const Groupoid& src = *f.source();
  const Groupoid& tgt = *f.target();
  FullnessResult result;
  for (ObjId a = 0; a < src.object_count() && result.full; ++a)
    for (ObjId b = 0; b < src.object_count() && result.full; ++b) {
      std::vector<bool> hit(tgt.morphism_count(), false);
      for (MorId m : src.hom_set(a, b)) hit[f.map_morphism(m)] = true;
      for (MorId u : tgt.hom_set(f.map_object(a), f.map_object(b)))
        if (!hit[u]) {
          result.full = false;
          result.from = a;
          result.to = b;
          result.uncovered = u;
          break;
        }
    }
  return result;
}

FaithfulnessResult check_faithful(const GroupoidFunctor& f) {
  const Groupoid& src = *f.source();
  FaithfulnessResult result;
  // Minimal-id witness: scan ordered pairs ascending.
  for (MorId a = 0; a < src.morphism_count() && result.faithful; ++a)
    for (MorId b = a + 1; b < src.morphism_count(); ++b) {
      if (src.source(a) != src.source(b) || src.target(a) != src.target(b))
        continue;
      if (f.map_morphism(a) == f.map_morphism(b)) {
        result.faithful = false;
        result.first = a;
        result.second = b;
        break;
      }
    }
  return result;
}

EssentialSurjectivityResult check_essentially_surjective(
    const GroupoidFunctor& f) {
  const Groupoid& tgt = *f.target();
  std::vector<bool> in_image(tgt.object_count(), false);
  for (ObjId x : f.object_map()) in_image[x] = true;

  EssentialSurjectivityResult result;
  for (ObjId b = 0; b < tgt.object_count(); ++b) {
    bool reachable = false;
    for (MorId m : tgt.morphisms_into(b))
      if (in_image[tgt.source(m)]) reachable = true;
    if (!reachable) {
      result.essentially_surjective = false;
      result.missed = b;
      break;
    }
  }
  return result;
}

SurjectivityResult check_surjective_on_objects(const GroupoidFunctor& f) {
  std::vector<bool> hit(f.target()->object_count(), false);
  for (ObjId x : f.object_map()) hit[x] = true;
  SurjectivityResult result;
  for (ObjId b = 0; b < hit.size(); ++b)
    if (!hit[b]) {
      result.surjective = false;
      result.missed = b;
      break;
    }
  return result;
}

SurjectivityResult check_surjective_on_morphisms(const GroupoidFunctor& f) {
  std::vector<bool> hit(f.target()->morphism_count(), false);
  for (MorId m : f.morphism_map()) hit[m] = true;
  SurjectivityResult result;
  for (MorId b = 0; b < hit.size(); ++b)
    if (!hit[b]) {
      result.surjective = false;
      result.missed = b;
      break;
    }
  return result;
}

bool injective_on_objects(const GroupoidFunctor& f) {
  std::vector<ObjId> seen = f.object_map();
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool preserves_inverses(const GroupoidFunctor& f) {
  const Groupoid& src = *f.source();
  const Groupoid& tgt = *f.target();
  for (MorId m = 0; m < src.morphism_count(); ++m)
    if (f.map_morphism(src.inverse(m)) != tgt.inverse(f.map_morphism(m)))
      return false;
  return true;
}

bool is_isomorphism(const GroupoidFunctor& f) {
  if (!injective_on_objects(f)) return false;
  if (f.object_map().size() != f.target()->object_count()) return false;
  std::vector<MorId> seen = f.morphism_map();
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return seen.size() == f.target()->morphism_count();
}

}  // namespace gpd
