#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coarsekit/zoo.hpp"

namespace coarsekit {

/// A malformed space description. `line` is 1-based and points at the
/// offending token or key when it can be located, 0 otherwise.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the JSON space description format (see docs/schema.md).
SpaceSpec parse_space_spec(const std::string& text);
SpaceSpec load_space_spec(const std::string& path);

/// Canonical JSON form; parse_space_spec(to_json(s).dump()) reproduces s.
nlohmann::json to_json(const SpaceSpec& spec);
SpaceSpec space_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GrowthFunction& f);

}  // namespace coarsekit
