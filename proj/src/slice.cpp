#include "gpd/slice.hpp"

#include <algorithm>

namespace gpd {

ObjId SliceGroupoid::object_index_of(MorId base_morphism) const {
  if (base_morphism >= base_to_object.size() ||
      base_to_object[base_morphism] == kNone)
    throw Error(ErrorCode::UnknownRef,
                "morphism is not an object of this slice");
  return base_to_object[base_morphism];
}

MorId SliceGroupoid::morphism_index(ObjId from, ObjId to) const {
  if (from >= objects() || to >= objects())
    throw Error(ErrorCode::UnknownRef, "slice object index out of range");
  return static_cast<MorId>(from * objects() + to);
}

SliceGroupoid slice(const GroupoidPtr& g, ObjId x, std::size_t size_limit) {
  g->object(x);
  if (g->morphism_count() > size_limit)
    throw Error(ErrorCode::SizeLimit,
                "groupoid has " + std::to_string(g->morphism_count()) +
                    " morphisms, size limit is " + std::to_string(size_limit));

  SliceGroupoid s;
  s.base = g;
  s.apex = x;
  s.object_to_base = g->morphisms_into(x);  // ascending by id
  s.base_to_object.assign(g->morphism_count(), kNone);
  for (ObjId i = 0; i < s.object_to_base.size(); ++i)
    s.base_to_object[s.object_to_base[i]] = i;

  const std::size_t o = s.objects();
  if (o * o > size_limit)
    throw Error(ErrorCode::SizeLimit,
                "slice would have " + std::to_string(o * o) +
                    " morphisms, size limit is " + std::to_string(size_limit));

  GroupoidData data;
  for (ObjId i = 0; i < o; ++i)
    data.objects.push_back({i, g->morphism(s.object_to_base[i]).name});

  // Exactly one morphism per ordered pair, underlying g = to⁻¹∘from.
  for (ObjId i = 0; i < o; ++i) {
    MorId from = s.object_to_base[i];
    for (ObjId j = 0; j < o; ++j) {
      MorId to = s.object_to_base[j];
      MorId underlying = g->compose(g->inverse(to), from);
      s.triangles.push_back({i, j, underlying});
      data.morphisms.push_back({static_cast<MorId>(i * o + j),
                                "<" + g->morphism(from).name + "->" +
                                    g->morphism(to).name + ">",
                                i, j});
    }
  }
  auto mid = [o](ObjId i, ObjId j) { return static_cast<MorId>(i * o + j); };
  for (ObjId i = 0; i < o; ++i) data.identities.emplace_back(i, mid(i, i));
  for (ObjId i = 0; i < o; ++i)
    for (ObjId j = 0; j < o; ++j)
      data.inverses.emplace_back(mid(i, j), mid(j, i));
  // Triangles concatenate: (j->k)∘(i->j) = i->k.
  for (ObjId j = 0; j < o; ++j)
    for (ObjId k = 0; k < o; ++k)
      for (ObjId i = 0; i < o; ++i)
        data.composites.push_back({mid(j, k), mid(i, j), mid(i, k)});

  GroupoidValidation v = Groupoid::validate(data);
  if (!v.ok())
    throw Error(ErrorCode::Internal,
                "slice failed validation: " + v.violations.front().message);
  s.groupoid = std::make_shared<const Groupoid>(std::move(*v.groupoid));
  return s;
}

SliceMorphism slice_hom(const SliceGroupoid& s, MorId f, MorId f_prime) {
  ObjId i = s.object_index_of(f);
  ObjId j = s.object_index_of(f_prime);
  return s.triangles[s.morphism_index(i, j)];
}

MorId slice_compose(const SliceGroupoid& s, MorId m1, MorId m2) {
  if (m1 >= s.triangles.size() || m2 >= s.triangles.size())
    throw Error(ErrorCode::UnknownRef, "slice morphism id out of range");
  const SliceMorphism& a = s.triangles[m1];
  const SliceMorphism& b = s.triangles[m2];
  if (a.to != b.from)
    throw Error(ErrorCode::NotComposable,
                "slice morphisms do not concatenate");
  // Same as the slice's own composition table: m1 applied first.
  return s.groupoid->compose(m2, m1);
}

ZeroObjectProof zero_object(const SliceGroupoid& s) {
  ZeroObjectProof proof;
  proof.zero_base = s.base->identity(s.apex);
  proof.zero_index = s.object_index_of(proof.zero_base);
  for (ObjId i = 0; i < s.objects(); ++i) {
    proof.from_zero.push_back(s.morphism_index(proof.zero_index, i));
    proof.to_zero.push_back(s.morphism_index(i, proof.zero_index));
  }
  return proof;
}

}  // namespace gpd
