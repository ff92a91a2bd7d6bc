#ifndef GPD_INDUCED_HPP
#define GPD_INDUCED_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "gpd/core.hpp"
#include "gpd/functor.hpp"
#include "gpd/slice.hpp"

namespace gpd {

/// F_X: G/X -> H/FX with F_X f = F f on objects and F_X<g> = <F g> on
/// morphisms.
struct InducedFunctor {
  GroupoidFunctor base;      // F
  ObjId apex;                // X
  SliceGroupoid source_slice;
  SliceGroupoid target_slice;
  GroupoidFunctor functor;   // between the slice groupoids
};

InducedFunctor induced_functor(const GroupoidFunctor& f, ObjId x,
                               std::size_t size_limit = kDefaultSizeLimit);

/// Slice objects sent to id_FX, as base morphism ids of G, ascending.
struct KernelSet {
  std::vector<MorId> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

KernelSet kernel(const InducedFunctor& fx);

struct ImageOfIdentityReport {
  bool full_at_apex = false;
  std::optional<MorId> uncovered_loop;
  bool image_of_identity_is_identity = false;
  /// full_at_apex implies the conclusion; the converse need not hold.
  bool implication_holds = false;
};

ImageOfIdentityReport check_image_of_identity(const GroupoidFunctor& f,
                                              ObjId x);

struct KernelPropertiesReport {
  bool source_image_constant = true;       // F(dom f) == F X for f in ker
  bool triangles_to_identity = true;       // F_X<f> is the identity triangle
  bool pair_triangles_to_identity = true;  // F_X<g⁻¹∘f> likewise
  /// Whether g⁻¹∘f itself lies in the kernel, recorded per ordered pair
  /// (f, g); not asserted either way.
  std::vector<std::tuple<MorId, MorId, bool>> pair_membership;

  bool all_hold() const {
    return source_image_constant && triangles_to_identity &&
           pair_triangles_to_identity;
  }
};

KernelPropertiesReport check_kernel_properties(const InducedFunctor& fx);

/// Image objects of F_X (as base morphism ids of H, ascending) paired
/// with their preimage classes, which partition the objects of G/X.
struct ImagePartition {
  std::vector<MorId> image;
  std::vector<std::vector<MorId>> classes;  // parallel to image; G-morphism ids
};

ImagePartition image_and_partition(const InducedFunctor& fx);

}  // namespace gpd

#endif  // GPD_INDUCED_HPP
