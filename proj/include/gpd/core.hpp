#ifndef GPD_CORE_HPP
#define GPD_CORE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gpd {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

/// Sentinel for "no object/morphism".
inline constexpr std::uint32_t kNone = 0xffffffffu;

/// Derived constructions refuse inputs/outputs beyond this many morphisms
/// unless the caller passes a larger limit explicitly.
inline constexpr std::size_t kDefaultSizeLimit = 10000;

enum class ErrorCode {
  UnknownRef,
  NotComposable,
  SizeLimit,
  BudgetExceeded,
  InvalidCayleyTable,
  NameClash,
  Mismatch,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Laws and structural requirements a validation can report against.
enum class Law {
  DuplicateName,
  BadReference,
  MissingIdentity,
  MissingInverse,
  DuplicateAssignment,
  MissingComposite,
  BadEndpoints,
  AssociativityViolation,
  IdentityViolation,
  InverseViolation,
  NotTotal,
  EndpointMismatch,
  CompositionViolation,
  NotWide,
  NotClosedUnderComposition,
  NotClosedUnderInverse,
};

std::string_view law_name(Law law);

struct Violation {
  Law law;
  std::string message;             // human-readable, names the offenders
  std::vector<MorId> morphisms;    // witnessing morphisms, if any
  std::vector<ObjId> objects;      // witnessing objects, if any
};

struct Object {
  ObjId id;
  std::string name;
};

struct Morphism {
  MorId id;
  std::string name;
  ObjId source;
  ObjId target;
};

/// Unchecked groupoid tables as read from a file or assembled by hand.
/// `composites` holds (g, f, g_after_f) triples meaning g∘f = f-then-g.
struct GroupoidData {
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;
  std::vector<std::array<MorId, 3>> composites;
  std::vector<std::pair<ObjId, MorId>> identities;
  std::vector<std::pair<MorId, MorId>> inverses;
};

class Groupoid;

struct GroupoidValidation {
  std::optional<Groupoid> groupoid;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// A finite groupoid: explicit object/morphism lists plus total
/// composition, identity and inverse tables.  Immutable after validation;
/// every operation is a pure read, so concurrent use is safe.
class Groupoid {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const Object& object(ObjId x) const;
  const Morphism& morphism(MorId f) const;

  std::optional<ObjId> object_named(std::string_view name) const;
  std::optional<MorId> morphism_named(std::string_view name) const;

  ObjId source(MorId f) const { return morphism(f).source; }
  ObjId target(MorId f) const { return morphism(f).target; }

  MorId identity(ObjId x) const;
  MorId inverse(MorId f) const;

  bool composable(MorId g, MorId f) const;

  /// g∘f with f applied first; throws NotComposable when s(g) != t(f).
  MorId compose(MorId g, MorId f) const;

  /// Morphisms with the given target, ascending by id.
  const std::vector<MorId>& morphisms_into(ObjId x) const;
  /// Morphisms with the given source, ascending by id.
  const std::vector<MorId>& morphisms_out_of(ObjId x) const;

  /// Hom(from, to), ascending by id.
  std::vector<MorId> hom_set(ObjId from, ObjId to) const;

  GroupoidData to_data() const;

  bool operator==(const Groupoid& other) const;

  /// Checks all groupoid laws on the raw tables.  On success the returned
  /// value carries the groupoid; otherwise every violated law is listed
  /// with its witnesses.
  static GroupoidValidation validate(const GroupoidData& data);

 private:
  friend GroupoidValidation validate_groupoid(const GroupoidData&);

  Groupoid() = default;

  std::vector<Object> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identity_;             // by object
  std::vector<MorId> inverse_;              // by morphism
  std::vector<std::vector<MorId>> in_;      // by object, ascending
  std::vector<std::vector<MorId>> out_;     // by object, ascending
  std::vector<std::uint32_t> in_pos_;       // f -> index of f in in_[target(f)]
  std::vector<std::vector<MorId>> table_;   // table_[g][in_pos_[f]] = g∘f
  std::unordered_map<std::string, ObjId> object_names_;
  std::unordered_map<std::string, MorId> morphism_names_;
};

using GroupoidPtr = std::shared_ptr<const Groupoid>;

inline GroupoidValidation validate_groupoid(const GroupoidData& data) {
  return Groupoid::validate(data);
}

/// Full subgroupoid on every object reachable from x, with id mappings in
/// both directions.  Reachability only needs morphisms into x.
struct ComponentResult {
  GroupoidPtr component;
  std::vector<ObjId> object_to_parent;
  std::vector<MorId> morphism_to_parent;
  std::vector<ObjId> parent_object_to_component;   // kNone when outside
  std::vector<MorId> parent_morphism_to_component; // kNone when outside
};

ComponentResult connected_component(const Groupoid& g, ObjId x);

/// A wide, composition- and inverse-closed morphism subset of a parent
/// groupoid.  Always carries the ids in ascending order.
struct SubgroupoidSelection {
  std::vector<MorId> morphisms;

  bool contains(MorId f) const;
};

struct SubgroupoidCheck {
  std::optional<SubgroupoidSelection> selection;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

SubgroupoidCheck is_wide_closed_subgroupoid(const Groupoid& g,
                                            std::vector<MorId> morphisms);

/// The trivial wide subgroupoid (identities only).
SubgroupoidSelection identity_subgroupoid(const Groupoid& g);

/// The whole groupoid as a selection.
SubgroupoidSelection full_subgroupoid(const Groupoid& g);

}  // namespace gpd

#endif  // GPD_CORE_HPP
