#include "gpd/induced.hpp"

#include <algorithm>
#include <map>

namespace gpd {

InducedFunctor induced_functor(const GroupoidFunctor& f, ObjId x,
                               std::size_t size_limit) {
  InducedFunctor result;
  result.base = f;
  result.apex = x;
  result.source_slice = slice(f.source(), x, size_limit);
  result.target_slice = slice(f.target(), f.map_object(x), size_limit);

  const SliceGroupoid& sg = result.source_slice;
  const SliceGroupoid& tg = result.target_slice;

  FunctorData data;
  data.source = sg.groupoid;
  data.target = tg.groupoid;
  for (MorId base_obj : sg.object_to_base)
    data.object_map.push_back(tg.object_index_of(f.map_morphism(base_obj)));
  for (const SliceMorphism& tri : sg.triangles) {
    MorId image = tg.morphism_index(data.object_map[tri.from],
                                    data.object_map[tri.to]);
    // Defining equation on morphisms: the image triangle carries F g.
    if (tg.triangles[image].underlying != f.map_morphism(tri.underlying))
      throw Error(ErrorCode::Internal,
                  "induced functor does not carry F g on a triangle");
    data.morphism_map.push_back(image);
  }
  FunctorValidation v = validate_functor(std::move(data));
  if (!v.ok())
    throw Error(ErrorCode::Internal,
                "induced functor failed validation: " +
                    v.violations.front().message);
  result.functor = std::move(*v.functor);
  return result;
}

KernelSet kernel(const InducedFunctor& fx) {
  KernelSet result;
  ObjId zero = fx.target_slice.object_index_of(
      fx.target_slice.base->identity(fx.target_slice.apex));
  for (ObjId i = 0; i < fx.source_slice.objects(); ++i)
    if (fx.functor.map_object(i) == zero)
      result.members.push_back(fx.source_slice.object_to_base[i]);
  return result;  // ascending because slice objects are
}

ImageOfIdentityReport check_image_of_identity(const GroupoidFunctor& f,
                                              ObjId x) {
  ImageOfIdentityReport report;
  FullAtResult full = is_full_at(f, x);
  report.full_at_apex = full.full_at;
  report.uncovered_loop = full.uncovered_loop;
  report.image_of_identity_is_identity =
      f.map_morphism(f.source()->identity(x)) ==
      f.target()->identity(f.map_object(x));
  report.implication_holds =
      !report.full_at_apex || report.image_of_identity_is_identity;
  return report;
}

KernelPropertiesReport check_kernel_properties(const InducedFunctor& fx) {
  KernelPropertiesReport report;
  const Groupoid& g = *fx.base.source();
  const Groupoid& h = *fx.base.target();
  const SliceGroupoid& sg = fx.source_slice;
  const SliceGroupoid& tg = fx.target_slice;
  KernelSet ker = kernel(fx);

  ObjId fx_obj = fx.base.map_object(fx.apex);
  ObjId zero_t = tg.object_index_of(h.identity(fx_obj));
  MorId identity_triangle = tg.groupoid->identity(zero_t);
  ObjId apex_index =
      sg.base_to_object[g.identity(fx.apex)] != kNone
          ? sg.object_index_of(g.identity(fx.apex))
          : kNone;

  for (MorId f : ker.members) {
    if (fx.base.map_object(g.source(f)) != fx_obj)
      report.source_image_constant = false;
    if (apex_index != kNone) {
      MorId tri = sg.morphism_index(sg.object_index_of(f), apex_index);
      if (fx.functor.map_morphism(tri) != identity_triangle)
        report.triangles_to_identity = false;
    }
  }
  for (MorId f : ker.members)
    for (MorId k : ker.members) {
      MorId tri = sg.morphism_index(sg.object_index_of(f),
                                    sg.object_index_of(k));
      // Sanity: the unique morphism f -> k carries g⁻¹∘f.
      MorId expected = g.compose(g.inverse(k), f);
      if (sg.triangles[tri].underlying != expected)
        throw Error(ErrorCode::Internal, "triangle underlying mismatch");
      if (fx.functor.map_morphism(tri) != identity_triangle)
        report.pair_triangles_to_identity = false;
      bool in_kernel =
          sg.base_to_object[expected] != kNone &&
          fx.functor.map_object(sg.base_to_object[expected]) == zero_t;
      report.pair_membership.emplace_back(f, k, in_kernel);
    }
  return report;
}

ImagePartition image_and_partition(const InducedFunctor& fx) {
  const SliceGroupoid& sg = fx.source_slice;
  const SliceGroupoid& tg = fx.target_slice;

  std::map<MorId, std::vector<MorId>> classes;  // H morphism -> G morphisms
  for (ObjId i = 0; i < sg.objects(); ++i)
    classes[tg.object_to_base[fx.functor.map_object(i)]].push_back(
        sg.object_to_base[i]);

  ImagePartition result;
  std::size_t covered = 0;
  for (auto& [image, members] : classes) {
    if (members.empty())
      throw Error(ErrorCode::Internal, "empty preimage class");
    covered += members.size();
    result.image.push_back(image);
    std::sort(members.begin(), members.end());
    result.classes.push_back(std::move(members));
  }
  if (covered != sg.objects() || result.image.size() != result.classes.size())
    throw Error(ErrorCode::Internal, "preimage classes do not partition");
  return result;
}

}  // namespace gpd
