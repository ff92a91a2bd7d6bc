#ifndef GPD_SLICE_HPP
#define GPD_SLICE_HPP

#include <vector>

#include "gpd/core.hpp"

namespace gpd {

/// A commuting triangle over the apex: from = to ∘ underlying in the base.
/// `from`/`to` are slice object indices, `underlying` a base morphism id.
struct SliceMorphism {
  ObjId from;
  ObjId to;
  MorId underlying;
};

/// The slice of a groupoid at an object: objects are the base morphisms
/// with target `apex`, and there is exactly one morphism between any two
/// of them, carried by g = to⁻¹∘from.
class SliceGroupoid {
 public:
  GroupoidPtr base;
  ObjId apex;
  GroupoidPtr groupoid;                 // the derived groupoid itself
  std::vector<MorId> object_to_base;    // slice object -> base morphism, ascending
  std::vector<ObjId> base_to_object;    // base morphism -> slice object or kNone
  std::vector<SliceMorphism> triangles; // by slice morphism id

  std::size_t objects() const { return object_to_base.size(); }

  /// Slice object index of a base morphism into the apex.
  ObjId object_index_of(MorId base_morphism) const;

  /// Slice morphism id of the unique arrow from -> to.
  MorId morphism_index(ObjId from, ObjId to) const;
};

SliceGroupoid slice(const GroupoidPtr& g, ObjId x,
                    std::size_t size_limit = kDefaultSizeLimit);

/// The unique slice morphism f -> f'; both arguments are base morphism ids.
SliceMorphism slice_hom(const SliceGroupoid& s, MorId f, MorId f_prime);

/// Composite of m1: f->f' with m2: f'->f''; returns the slice morphism id
/// of f->f''.  The underlying base morphism is compose(u2, u1).
MorId slice_compose(const SliceGroupoid& s, MorId m1, MorId m2);

/// The zero object id_apex with, per object, its unique incoming and
/// outgoing morphisms.
struct ZeroObjectProof {
  ObjId zero_index;   // slice object index of id_apex
  MorId zero_base;    // = identity(apex)
  std::vector<MorId> from_zero;  // slice morphism ids id_apex -> g, by object
  std::vector<MorId> to_zero;    // slice morphism ids g -> id_apex, by object
};

ZeroObjectProof zero_object(const SliceGroupoid& s);

}  // namespace gpd

#endif  // GPD_SLICE_HPP
