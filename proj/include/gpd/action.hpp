#ifndef GPD_ACTION_HPP
#define GPD_ACTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "gpd/core.hpp"
#include "gpd/functor.hpp"
#include "gpd/slice.hpp"

namespace gpd {

/// Value of Hom(?,-) at an object: all morphisms out of it.
struct HomActionValue {
  ObjId object;
  std::vector<MorId> carrier;  // ascending
};

HomActionValue hom_action(const Groupoid& g, ObjId x);

/// The precomposition map Hom(Y,-) -> Hom(X,-) along f: X -> Y,
/// g ↦ g∘f.  `graph` pairs each element of the Y-carrier with its image.
struct HomActionMap {
  MorId along;
  std::vector<std::pair<MorId, MorId>> graph;  // sorted by first

  MorId apply(MorId g) const;
};

HomActionMap hom_action_map(const Groupoid& g, MorId f);

struct LawCheck {
  bool holds = true;
  std::string witness;
};

/// Identity and contravariant composition laws of Hom(?,-), exhaustively.
LawCheck verify_hom_action_laws(const Groupoid& g);

/// G⫽G: objects are the morphisms of the base, a morphism (g, f) runs
/// g -> g∘f, and composition appends to the precomposition side.
class ActionGroupoid {
 public:
  GroupoidPtr base;
  GroupoidPtr groupoid;
  /// Action morphism id -> (g, f); ordered by (g, f).
  std::vector<std::pair<MorId, MorId>> pairs;

  /// Objects of G⫽G are indexed exactly by base morphism ids.
  ObjId object_of(MorId base_morphism) const;
  MorId morphism_for(MorId g, MorId f) const;
};

ActionGroupoid action_groupoid(const GroupoidPtr& g,
                               std::size_t size_limit = kDefaultSizeLimit);

/// Arrows reversed, composition transposed; ids and names unchanged.
Groupoid opposite(const Groupoid& g);

/// ι_X: G/X -> G⫽G, f ↦ f and <g>: f -> f' ↦ (f', g): f' -> f.
/// Contravariant, so it is stored as raw maps with its own law report.
struct ContravariantEmbedding {
  std::vector<ObjId> object_map;   // slice object -> action object
  std::vector<MorId> morphism_map; // slice morphism -> action morphism
  bool functorial = true;          // ι(m1∘m2) = ι(m1)∘ι(m2), identities kept
  bool fully_faithful = true;
  bool injective_on_objects = true;
  std::string witness;
};

ContravariantEmbedding embed_slice_contra(const SliceGroupoid& s,
                                          const ActionGroupoid& a);

/// The covariant form ι_X*: (G/X)ᵒᵖ -> G⫽G with the same assignments.
struct CovariantEmbedding {
  GroupoidPtr op_slice;
  GroupoidFunctor functor;
};

CovariantEmbedding embed_slice_co(const SliceGroupoid& s,
                                  const ActionGroupoid& a);

/// s on (G/X)ᵒᵖ: f ↦ s(f), triangle <g> ↦ g⁻¹.
GroupoidFunctor source_functor_op_slice(const SliceGroupoid& s,
                                        const GroupoidPtr& op_slice);

/// s on G⫽G: g ↦ s(g), (g,f) ↦ f⁻¹.
GroupoidFunctor source_functor_action(const ActionGroupoid& a);

}  // namespace gpd

#endif  // GPD_ACTION_HPP
