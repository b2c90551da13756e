#include "coarsekit/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace coarsekit {

using nlohmann::json;

namespace {

// Schema failure before line lookup: `key` is the member name to search for.
struct RawSchemaError {
  std::string path;
  std::string key;
  std::string message;
};

[[noreturn]] void fail(const std::string& path, const std::string& key, const std::string& msg) {
  throw RawSchemaError{path, key, msg};
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) fail(path, "", std::string("missing required key '") + key + "'");
  return j.at(key);
}

void allow_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) fail(path, k, "unknown key '" + k + "'");
  }
}

std::int64_t integer(const json& j, const std::string& path, const char* key) {
  const json& v = member(j, path, key);
  if (!v.is_number_integer()) fail(path, key, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::optional<Distance> opt_integer(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return integer(j, path, key);
}

GrowthFunction growth(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "", "growth function must be an object");
  allow_keys(j, path, {"type", "a", "b", "base"});
  GrowthFunction f;
  const json& t = member(j, path, "type");
  const std::string type = t.is_string() ? t.get<std::string>() : "";
  if (type == "linear") {
    f.form = GrowthFunction::Form::Linear;
  } else if (type == "quadratic") {
    f.form = GrowthFunction::Form::Quadratic;
  } else if (type == "exponential") {
    f.form = GrowthFunction::Form::Exponential;
  } else {
    fail(path, "type", "growth type must be one of linear, quadratic, exponential");
  }
  f.a = j.contains("a") ? integer(j, path, "a") : 1;
  f.b = j.contains("b") ? integer(j, path, "b") : 0;
  f.base = j.contains("base") ? integer(j, path, "base") : 2;
  try {
    f.validate();
  } catch (const UsageError& e) {
    fail(path, "a", e.what());
  }
  return f;
}

FiniteSpec finite(const json& j, const std::string& path) {
  FiniteSpec f;
  const json& d = member(j, path, "distances");
  if (!d.is_array() || d.empty()) fail(path, "distances", "'distances' must be a nonempty array of rows");
  for (const auto& row : d) {
    if (!row.is_array()) fail(path, "distances", "'distances' rows must be arrays");
    std::vector<Distance> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(path, "distances", "distances must be integers");
      r.push_back(v.get<Distance>());
    }
    f.distances.push_back(std::move(r));
  }
  if (j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_array()) fail(path, "labels", "'labels' must be an array of strings");
    for (const auto& s : l) {
      if (!s.is_string()) fail(path, "labels", "'labels' must be an array of strings");
      f.labels.push_back(s.get<std::string>());
    }
  }
  try {
    FiniteMetricSpace check(f.labels, f.distances);
    f.labels = check.labels();
  } catch (const UsageError& e) {
    fail(path, "distances", e.what());
  }
  return f;
}

SpaceSpec parse_node(const json& j, const std::string& path, bool nested) {
  if (!j.is_object()) fail(path, "", "space description must be a JSON object");
  const json& k = member(j, path, "kind");
  if (!k.is_string()) fail(path, "kind", "'kind' must be a string");
  const std::string kind = k.get<std::string>();
  SpaceSpec spec;
  if (kind == "grid") {
    allow_keys(j, path, {"kind", "signed", "dims", "horizon"});
    GridSpec g;
    if (j.contains("signed")) {
      if (!j.at("signed").is_boolean()) fail(path, "signed", "'signed' must be a boolean");
      g.is_signed = j.at("signed").get<bool>();
    }
    g.dims = static_cast<int>(integer(j, path, "dims"));
    if (g.dims < 1) fail(path, "dims", "'dims' must be >= 1");
    spec.shape = g;
  } else if (kind == "free_group") {
    allow_keys(j, path, {"kind", "rank", "horizon"});
    FreeGroupSpec g{static_cast<int>(integer(j, path, "rank"))};
    if (g.rank < 1) fail(path, "rank", "'rank' must be >= 1");
    spec.shape = g;
  } else if (kind == "M") {
    allow_keys(j, path, {"kind", "horizon"});
    spec.shape = TernarySpec{};
  } else if (kind == "Mk") {
    allow_keys(j, path, {"kind", "k", "horizon"});
    SquaresSpec s{static_cast<int>(integer(j, path, "k"))};
    if (s.k < 1) fail(path, "k", "'k' must be >= 1");
    spec.shape = s;
  } else if (kind == "M32") {
    allow_keys(j, path, {"kind", "horizon"});
    spec.shape = HalfStratumSpec{};
  } else if (kind == "finite") {
    allow_keys(j, path, {"kind", "labels", "distances", "horizon"});
    spec.shape = finite(j, path);
  } else if (kind == "clusters") {
    allow_keys(j, path, {"kind", "pattern", "gap", "count", "horizon"});
    ClusterSpec c;
    const json& p = member(j, path, "pattern");
    if (!p.is_object()) fail(path, "pattern", "'pattern' must be an object");
    allow_keys(p, path + "/pattern", {"labels", "distances"});
    c.pattern = finite(p, path + "/pattern");
    c.gap = growth(member(j, path, "gap"), path + "/gap");
    c.count = static_cast<int>(integer(j, path, "count"));
    if (c.count < 1) fail(path, "count", "'count' must be >= 1");
    spec.shape = c;
  } else if (kind == "coarse_union") {
    allow_keys(j, path, {"kind", "components", "spoke", "horizon"});
    CoarseUnionSpec u;
    const json& comps = member(j, path, "components");
    if (!comps.is_array() || comps.empty()) fail(path, "components", "'components' must be a nonempty array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      u.components.push_back(parse_node(comps[i], path + "/components/" + std::to_string(i), true));
    }
    u.spoke = growth(member(j, path, "spoke"), path + "/spoke");
    spec.shape = u;
  } else {
    fail(path, "kind", "unknown kind '" + kind + "'");
  }
  spec.horizon = opt_integer(j, path, "horizon");
  if (nested && spec.horizon) fail(path, "horizon", "component descriptions take no horizon");
  if (!nested && !spec.horizon && kind != "clusters" && kind != "finite") {
    fail(path, "", "missing required key 'horizon'");
  }
  if (spec.horizon && *spec.horizon < 0) fail(path, "horizon", "'horizon' must be >= 0");
  return spec;
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

std::size_t line_of_key(const std::string& text, const std::string& key) {
  if (key.empty()) return 0;
  const auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

}  // namespace

SpaceSpec space_spec_from_json(const json& j) {
  try {
    return parse_node(j, "", false);
  } catch (const RawSchemaError& e) {
    throw SchemaError("schema error at '" + (e.path.empty() ? std::string("/") : e.path) + "': " + e.message, 0);
  }
}

SpaceSpec parse_space_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SchemaError("line " + std::to_string(line) + ": malformed JSON: " + e.what(), line);
  }
  try {
    return parse_node(j, "", false);
  } catch (const RawSchemaError& e) {
    const std::size_t line = line_of_key(text, e.key);
    std::string where = line ? "line " + std::to_string(line) + ": " : std::string();
    throw SchemaError(where + "schema error at '" + (e.path.empty() ? std::string("/") : e.path) +
                          "': " + e.message,
                      line);
  }
}

SpaceSpec load_space_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open space description '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_space_spec(ss.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what(), e.line());
  }
}

json to_json(const GrowthFunction& f) {
  json j{{"type", to_string(f.form)}, {"a", f.a}, {"b", f.b}};
  if (f.form == GrowthFunction::Form::Exponential) j["base"] = f.base;
  return j;
}

namespace {

json finite_json(const FiniteSpec& f) { return json{{"labels", f.labels}, {"distances", f.distances}}; }

json shape_json(const SpaceSpec& spec) {
  json j;
  j["kind"] = spec.kind();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GridSpec>) {
          j["signed"] = s.is_signed;
          j["dims"] = s.dims;
        } else if constexpr (std::is_same_v<T, FreeGroupSpec>) {
          j["rank"] = s.rank;
        } else if constexpr (std::is_same_v<T, SquaresSpec>) {
          j["k"] = s.k;
        } else if constexpr (std::is_same_v<T, FiniteSpec>) {
          j.update(finite_json(s));
        } else if constexpr (std::is_same_v<T, ClusterSpec>) {
          j["pattern"] = finite_json(s.pattern);
          j["gap"] = to_json(s.gap);
          j["count"] = s.count;
        } else if constexpr (std::is_same_v<T, CoarseUnionSpec>) {
          json comps = json::array();
          for (const auto& c : s.components) comps.push_back(to_json(c));
          j["components"] = comps;
          j["spoke"] = to_json(s.spoke);
        }
      },
      spec.shape);
  return j;
}

}  // namespace

json to_json(const SpaceSpec& spec) {
  json j = shape_json(spec);
  if (spec.horizon) j["horizon"] = *spec.horizon;
  return j;
}

}  // namespace coarsekit
