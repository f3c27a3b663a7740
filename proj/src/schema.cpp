#include "rwm/schema.hpp"

#include <set>
#include <sstream>

namespace rwm {

const char* attr_kind_name(AttrKind k) {
  switch (k) {
    case AttrKind::Int: return "int";
    case AttrKind::Float: return "float";
    case AttrKind::String: return "string";
    case AttrKind::Bool: return "bool";
  }
  return "?";
}

namespace {
template <typename V>
std::optional<std::size_t> find_name(const V& items, const std::string& name) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if constexpr (std::is_same_v<typename V::value_type, std::string>) {
      if (items[i] == name) return i;
    } else {
      if (items[i].name == name) return i;
    }
  }
  return std::nullopt;
}
}  // namespace

std::optional<std::size_t> Schema::table_index(const std::string& name) const {
  return find_name(tables, name);
}
std::optional<std::size_t> Schema::attr_type_index(const std::string& name) const {
  return find_name(attr_types, name);
}
std::optional<std::size_t> Schema::hom_index(const std::string& name) const {
  return find_name(homs, name);
}
std::optional<std::size_t> Schema::attr_index(const std::string& name) const {
  return find_name(attrs, name);
}

std::vector<std::string> validate(const Schema& s) {
  std::vector<std::string> out;
  auto dup_check = [&](const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) out.push_back(std::string(what) + " name duplicated: " + n);
  };
  std::vector<std::string> at_names, hom_names, attr_names;
  for (const auto& a : s.attr_types) at_names.push_back(a.name);
  for (const auto& h : s.homs) hom_names.push_back(h.name);
  for (const auto& a : s.attrs) attr_names.push_back(a.name);
  dup_check(s.tables, "table");
  dup_check(at_names, "attr type");
  dup_check(hom_names, "hom");
  dup_check(attr_names, "attr");

  for (const auto& h : s.homs) {
    if (!s.table_index(h.src))
      out.push_back("hom " + h.name + ": src is not a table: " + h.src);
    if (!s.table_index(h.tgt)) {
      std::string msg = "hom " + h.name + ": tgt is not a table: " + h.tgt;
      if (s.attr_type_index(h.tgt)) msg += " (homs may not target attribute types)";
      out.push_back(msg);
    }
  }
  for (const auto& a : s.attrs) {
    if (!s.table_index(a.src))
      out.push_back("attr " + a.name + ": src is not a table: " + a.src);
    if (!s.attr_type_index(a.type))
      out.push_back("attr " + a.name + ": type is not an attr type: " + a.type);
  }
  return out;
}

AttrKind kind_of(const Scalar& s) {
  switch (s.index()) {
    case 0: return AttrKind::Int;
    case 1: return AttrKind::Float;
    case 2: return AttrKind::String;
    default: return AttrKind::Bool;
  }
}

std::string scalar_repr(const Scalar& s) {
  std::ostringstream os;
  switch (s.index()) {
    case 0: os << std::get<std::int64_t>(s); break;
    case 1: os << std::get<double>(s); break;
    case 2: os << '"' << std::get<std::string>(s) << '"'; break;
    default: os << (std::get<bool>(s) ? "true" : "false"); break;
  }
  return os.str();
}

std::string attr_value_repr(const AttrValue& v) {
  if (v.is_var()) return "$" + std::to_string(v.var_id().id);
  return scalar_repr(v.scalar());
}

}  // namespace rwm
