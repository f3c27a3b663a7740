#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rwm {

// ============================================================================
//  Schemas
//
//  A schema is a finitely presented free category split into table objects
//  and attribute-type objects. Homs go table -> table, attrs go
//  table -> attribute type. No path equations.
// ============================================================================

enum class AttrKind { Int, Float, String, Bool };

const char* attr_kind_name(AttrKind k);

struct Schema {
  struct AttrType {
    std::string name;
    AttrKind kind = AttrKind::Int;
    bool operator==(const AttrType&) const = default;
  };
  struct Hom {
    std::string name;
    std::string src;  // table
    std::string tgt;  // table
    bool operator==(const Hom&) const = default;
  };
  struct Attr {
    std::string name;
    std::string src;   // table
    std::string type;  // attr type
    bool operator==(const Attr&) const = default;
  };

  std::vector<std::string> tables;
  std::vector<AttrType> attr_types;
  std::vector<Hom> homs;
  std::vector<Attr> attrs;

  bool operator==(const Schema&) const = default;

  std::optional<std::size_t> table_index(const std::string& name) const;
  std::optional<std::size_t> attr_type_index(const std::string& name) const;
  std::optional<std::size_t> hom_index(const std::string& name) const;
  std::optional<std::size_t> attr_index(const std::string& name) const;

  /// Index of a hom's src/tgt table, assuming the schema validates.
  std::size_t hom_src(std::size_t h) const { return *table_index(homs[h].src); }
  std::size_t hom_tgt(std::size_t h) const { return *table_index(homs[h].tgt); }
  std::size_t attr_src(std::size_t a) const { return *table_index(attrs[a].src); }
  std::size_t attr_type_of(std::size_t a) const { return *attr_type_index(attrs[a].type); }
  AttrKind attr_kind(std::size_t a) const { return attr_types[attr_type_of(a)].kind; }
};

using SchemaPtr = std::shared_ptr<const Schema>;

/// Empty list iff all schema invariants hold; each violation names the
/// offending element.
std::vector<std::string> validate(const Schema& s);

// ============================================================================
//  Attribute values
// ============================================================================

/// Rule-scoped attribute variable.
struct VarId {
  std::uint32_t id = 0;
  auto operator<=>(const VarId&) const = default;
};

using Scalar = std::variant<std::int64_t, double, std::string, bool>;

AttrKind kind_of(const Scalar& s);
std::string scalar_repr(const Scalar& s);

/// Either a concrete scalar or a variable. World states must be ground
/// (no variables); patterns may bind variables during matching.
struct AttrValue {
  std::variant<Scalar, VarId> v;

  AttrValue() : v(Scalar(std::int64_t{0})) {}
  AttrValue(Scalar s) : v(std::move(s)) {}
  AttrValue(VarId x) : v(x) {}

  static AttrValue of(std::int64_t x) { return AttrValue(Scalar(x)); }
  static AttrValue of(double x) { return AttrValue(Scalar(x)); }
  static AttrValue of(std::string x) { return AttrValue(Scalar(std::move(x))); }
  static AttrValue of(const char* x) { return AttrValue(Scalar(std::string(x))); }
  static AttrValue of(bool x) { return AttrValue(Scalar(x)); }
  static AttrValue var(std::uint32_t id) { return AttrValue(VarId{id}); }

  bool is_var() const { return std::holds_alternative<VarId>(v); }
  bool is_concrete() const { return !is_var(); }
  VarId var_id() const { return std::get<VarId>(v); }
  const Scalar& scalar() const { return std::get<Scalar>(v); }

  bool operator==(const AttrValue&) const = default;
};

std::string attr_value_repr(const AttrValue& v);

}  // namespace rwm
