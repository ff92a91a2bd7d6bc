#ifndef GPD_FUNCTOR_HPP
#define GPD_FUNCTOR_HPP

#include <optional>
#include <vector>

#include "gpd/core.hpp"

namespace gpd {

/// Unchecked functor tables.  Maps must be total on the source.
struct FunctorData {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<ObjId> object_map;    // by source object id
  std::vector<MorId> morphism_map;  // by source morphism id, kNone = missing
};

/// A validated structure-preserving map between groupoids.
class GroupoidFunctor {
 public:
  const GroupoidPtr& source() const { return source_; }
  const GroupoidPtr& target() const { return target_; }

  ObjId map_object(ObjId x) const;
  MorId map_morphism(MorId f) const;

  const std::vector<ObjId>& object_map() const { return object_map_; }
  const std::vector<MorId>& morphism_map() const { return morphism_map_; }

  bool operator==(const GroupoidFunctor& other) const;

 private:
  friend struct FunctorValidation;
  friend FunctorValidation validate_functor(FunctorData data);

  GroupoidFunctor() = default;

  GroupoidPtr source_;
  GroupoidPtr target_;
  std::vector<ObjId> object_map_;
  std::vector<MorId> morphism_map_;
};

struct FunctorValidation {
  std::optional<GroupoidFunctor> functor;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

FunctorValidation validate_functor(FunctorData data);

GroupoidFunctor identity_functor(GroupoidPtr g);

/// outer∘inner; the target of inner must equal the source of outer.
GroupoidFunctor compose_functors(const GroupoidFunctor& outer,
                                 const GroupoidFunctor& inner);

struct RestrictedFunctor {
  ComponentResult source_component;  // G_X
  ComponentResult target_component;  // H_FX
  GroupoidFunctor functor;           // G_X -> H_FX
};

RestrictedFunctor restrict_to_component(const GroupoidFunctor& f, ObjId x);

struct FullAtResult {
  bool full_at = false;
  std::optional<MorId> uncovered_loop;  // target loop missed, minimal id
};

/// Is the loop map Mor(x,x) -> Mor(Fx,Fx) surjective?
FullAtResult is_full_at(const GroupoidFunctor& f, ObjId x);

struct FullnessResult {
  bool full = true;
  ObjId from = kNone;
  ObjId to = kNone;
  MorId uncovered = kNone;  // morphism F(from)->F(to) not hit
};

struct FaithfulnessResult {
  bool faithful = true;
  MorId first = kNone;
  MorId second = kNone;  // distinct parallel morphisms with equal image
};

struct EssentialSurjectivityResult {
  bool essentially_surjective = true;
  ObjId missed = kNone;  // target object with no image in its component
};

FullnessResult check_full(const GroupoidFunctor& f);
FaithfulnessResult check_faithful(const GroupoidFunctor& f);
EssentialSurjectivityResult check_essentially_surjective(
    const GroupoidFunctor& f);

struct SurjectivityResult {
  bool surjective = true;
  std::uint32_t missed = kNone;  // first object/morphism not hit
};

SurjectivityResult check_surjective_on_objects(const GroupoidFunctor& f);
SurjectivityResult check_surjective_on_morphisms(const GroupoidFunctor& f);

bool injective_on_objects(const GroupoidFunctor& f);

/// F(f⁻¹) == F(f)⁻¹ everywhere.  Holds for every functor between
/// groupoids; kept as a redundant safety property.
bool preserves_inverses(const GroupoidFunctor& f);

/// Functor that is bijective on objects and on morphisms.
bool is_isomorphism(const GroupoidFunctor& f);

}  // namespace gpd

#endif  // GPD_FUNCTOR_HPP
