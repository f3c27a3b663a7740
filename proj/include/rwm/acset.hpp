#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rwm/schema.hpp"

namespace rwm {

// ============================================================================
//  ACSet instances and their morphisms
//
//  An instance stores, per table, a dense part count (ids 0..n-1), and for
//  each hom/attr a total column indexed by parts of the src table. Values
//  are immutable once built; everything downstream shares instances via
//  shared_ptr.
// ============================================================================

struct ACSet {
  SchemaPtr schema;
  std::vector<std::size_t> parts;              // per table
  std::vector<std::vector<std::size_t>> homs;  // per hom, length parts[src]
  std::vector<std::vector<AttrValue>> attrs;   // per attr, length parts[src]

  ACSet() = default;
  explicit ACSet(SchemaPtr s);

  std::size_t n_parts(std::size_t table) const { return parts[table]; }
  std::size_t n_parts(const std::string& table) const;

  /// Appends a part to `table` and extends outgoing hom/attr columns with
  /// placeholder values (hom 0, attr default). Returns the new id.
  std::size_t add_part(std::size_t table);
  std::size_t add_part(const std::string& table);

  void set_hom(const std::string& hom, std::size_t part, std::size_t target);
  void set_attr(const std::string& attr, std::size_t part, AttrValue value);
  std::size_t hom_value(const std::string& hom, std::size_t part) const;
  const AttrValue& attr_value(const std::string& attr, std::size_t part) const;

  bool operator==(const ACSet&) const;
};

using ACSetPtr = std::shared_ptr<const ACSet>;

ACSetPtr make_shared_acset(ACSet x);

/// Structural equality of the referenced schemas (pointer fast path).
bool same_schema(const ACSet& a, const ACSet& b);

/// Empty list iff the instance is well-formed: all columns sized to their
/// table, hom images in range, attribute scalars matching declared kinds.
std::vector<std::string> validate(const ACSet& x);

/// True iff no attribute cell holds a variable.
bool is_ground(const ACSet& x);

/// Variables appearing in x, in deterministic (attr, part) scan order.
std::vector<VarId> variables(const ACSet& x);

// ----------------------------------------------------------------------------

/// Natural transformation between instances of one schema: a component
/// function per table plus an assignment of each dom variable to a value
/// of the codomain.
struct ACSetMorphism {
  ACSetPtr dom, cod;
  std::vector<std::vector<std::size_t>> components;  // per table
  std::map<VarId, AttrValue> var_map;

  ACSetMorphism() = default;
  ACSetMorphism(ACSetPtr d, ACSetPtr c);

  static ACSetMorphism identity(ACSetPtr x);

  std::size_t apply(std::size_t table, std::size_t part) const {
    return components[table][part];
  }

  /// Image of a dom attr value under the variable assignment.
  AttrValue substitute(const AttrValue& v) const;

  bool operator==(const ACSetMorphism&) const;
};

/// True iff component sizes are right, naturality squares commute, and
/// substituted dom attributes agree with cod attributes.
bool is_natural(const ACSetMorphism& f);

/// Componentwise composite f;g. Requires cod(f) == dom(g).
ACSetMorphism compose(const ACSetMorphism& f, const ACSetMorphism& g);

struct MorphismPredicates {
  bool mono = false;
  bool iso = false;
  bool total_ground = false;
};

MorphismPredicates morphism_predicates(const ACSetMorphism& f);

// ----------------------------------------------------------------------------
//  Homomorphism search
// ----------------------------------------------------------------------------

struct HomSearchOptions {
  bool monic = false;
  /// Pre-assigned images: forced[table] maps part -> image part.
  std::map<std::size_t, std::map<std::size_t, std::size_t>> forced;
};

/// All natural morphisms pattern -> target extending `forced`, injective
/// per table when monic. The target must be ground. Results are in
/// lexicographic order of the assignment vector read in (table, part)
/// order; variables of the pattern are bound in the returned var_map.
std::vector<ACSetMorphism> homomorphisms(const ACSetPtr& pattern, const ACSetPtr& target,
                                         const HomSearchOptions& opts = {});

/// True iff f is bijective on every table with an invertible assignment;
/// used by tests comparing instances up to iso.
bool is_isomorphism(const ACSetMorphism& f);

/// Some isomorphism a -> b if one exists.
std::optional<ACSetMorphism> find_isomorphism(const ACSetPtr& a, const ACSetPtr& b);

}  // namespace rwm
