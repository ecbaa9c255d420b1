#pragma once

// Small JSON Schema checker covering the subset the report schema uses:
// type, enum, minimum, properties, required, additionalProperties, items,
// oneOf, and $ref into #/$defs. Returns the first violation found.

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace testsupport {

class schema_validator {
 public:
  explicit schema_validator(nlohmann::json schema) : root_(std::move(schema)) {}

  /// Nullopt when valid, else a "path: problem" description.
  std::optional<std::string> validate(const nlohmann::json& value) const {
    return check(root_, value, "$");
  }

 private:
  using json = nlohmann::json;

  static bool type_matches(const std::string& name, const json& v) {
    if (name == "object") return v.is_object();
    if (name == "array") return v.is_array();
    if (name == "string") return v.is_string();
    if (name == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (name == "number") return v.is_number();
    if (name == "boolean") return v.is_boolean();
    if (name == "null") return v.is_null();
    return false;
  }

  const json* resolve_ref(const std::string& ref) const {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return nullptr;
    std::string name = ref.substr(prefix.size());
    auto defs = root_.find("$defs");
    if (defs == root_.end()) return nullptr;
    auto it = defs->find(name);
    return it == defs->end() ? nullptr : &*it;
  }

  std::optional<std::string> check(const json& schema, const json& value,
                                   const std::string& path) const {
    if (auto ref = schema.find("$ref"); ref != schema.end()) {
      const json* target = resolve_ref(ref->get<std::string>());
      if (!target) return path + ": unresolvable $ref " + ref->get<std::string>();
      return check(*target, value, path);
    }
    if (auto ty = schema.find("type"); ty != schema.end()) {
      bool ok = false;
      if (ty->is_array()) {
        for (const json& t : *ty) ok = ok || type_matches(t.get<std::string>(), value);
      } else {
        ok = type_matches(ty->get<std::string>(), value);
      }
      if (!ok) return path + ": type mismatch, expected " + ty->dump();
    }
    if (auto en = schema.find("enum"); en != schema.end()) {
      bool ok = false;
      for (const json& choice : *en) ok = ok || choice == value;
      if (!ok) return path + ": value " + value.dump() + " not in enum " + en->dump();
    }
    if (auto mn = schema.find("minimum"); mn != schema.end()) {
      if (value.is_number() && value.get<double>() < mn->get<double>()) {
        return path + ": value " + value.dump() + " below minimum " + mn->dump();
      }
    }
    if (auto of = schema.find("oneOf"); of != schema.end()) {
      int matches = 0;
      for (const json& sub : *of) {
        if (!check(sub, value, path)) ++matches;
      }
      if (matches != 1) {
        return path + ": oneOf matched " + std::to_string(matches) + " branches, expected 1";
      }
    }
    if (value.is_object()) {
      if (auto req = schema.find("required"); req != schema.end()) {
        for (const json& key : *req) {
          if (!value.contains(key.get<std::string>())) {
            return path + ": missing required key '" + key.get<std::string>() + "'";
          }
        }
      }
      auto props = schema.find("properties");
      if (props != schema.end()) {
        for (auto it = props->begin(); it != props->end(); ++it) {
          if (!value.contains(it.key())) continue;
          if (auto err = check(it.value(), value.at(it.key()), path + "." + it.key())) {
            return err;
          }
        }
      }
      if (auto extra = schema.find("additionalProperties"); extra != schema.end()) {
        for (auto it = value.begin(); it != value.end(); ++it) {
          bool declared = props != schema.end() && props->contains(it.key());
          if (declared) continue;
          if (extra->is_boolean()) {
            if (!extra->get<bool>()) {
              return path + ": unexpected key '" + it.key() + "'";
            }
          } else if (auto err = check(*extra, it.value(), path + "." + it.key())) {
            return err;
          }
        }
      }
    }
    if (value.is_array()) {
      if (auto items = schema.find("items"); items != schema.end()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (auto err = check(*items, value[i], path + "[" + std::to_string(i) + "]")) {
            return err;
          }
        }
      }
    }
    return std::nullopt;
  }

  json root_;
};

}  // namespace testsupport
