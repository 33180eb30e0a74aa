#include "starsolve/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace starsolve {

using nlohmann::json;

const char* to_string(Family f) {
  switch (f) {
    case Family::Points: return "points";
    case Family::RandomMetric: return "random-metric";
    case Family::Strings: return "strings";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  if (s == "points") return Family::Points;
  if (s == "random-metric") return Family::RandomMetric;
  if (s == "strings") return Family::Strings;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

const char* to_string(InstanceKind k) {
  return k == InstanceKind::Similar ? "similar" : "labeling";
}

InstanceKind instance_kind_from_string(std::string_view s) {
  if (s == "similar") return InstanceKind::Similar;
  if (s == "labeling") return InstanceKind::Labeling;
  throw std::invalid_argument("unknown instance kind '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Canonical writer

namespace {

std::string fmt_double(double v) {
  char buf[40];
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  if (std::floor(v) == v && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_scalar_array(const json& a) {
  for (const auto& e : a)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void write_canonical(const json& v, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string pad2(indent + 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad2;
        out += json(it.key()).dump();
        out += ": ";
        write_canonical(it.value(), out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (is_scalar_array(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write_canonical(v[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad2;
        write_canonical(v[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += fmt_double(v.get<double>());
      return;
    default:
      out += v.dump();  // integers, bools, strings (escaped), null
      return;
  }
}

std::string canonical_bytes(const json& v) {
  std::string out;
  write_canonical(v, out, 0);
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Schema walking

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const char* type_name(const json& v) {
  switch (v.type()) {
    case json::value_t::object: return "object";
    case json::value_t::array: return "array";
    case json::value_t::string: return "string";
    case json::value_t::boolean: return "boolean";
    case json::value_t::null: return "null";
    default: return v.is_number() ? "number" : "value";
  }
}

const json& expect_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, std::string("expected object, got ") + type_name(v));
  return v;
}

const json& expect_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, std::string("expected array, got ") + type_name(v));
  return v;
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const json* v = find(obj, key);
  if (!v) fail(path, std::string("missing key '") + key + "'");
  return *v;
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, std::string("expected number, got ") + type_name(v));
  return v.get<double>();
}

std::uint64_t as_uint(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  fail(path, std::string("expected non-negative integer, got ") + type_name(v));
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, std::string("expected string, got ") + type_name(v));
  return v.get<std::string>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, std::string("expected boolean, got ") + type_name(v));
  return v.get<bool>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) fail(path, "unknown key '" + it.key() + "'");
  }
}

enum class SpaceForm { Matrix, Points, Strings };

struct SpaceInfo {
  SpaceForm form;
  std::shared_ptr<MatrixSpace> matrix;
  std::shared_ptr<PointSpace> points;
  std::shared_ptr<StringSpace> strings;

  std::shared_ptr<const MetricSpace> as_space() const {
    if (matrix) return matrix;
    if (points) return points;
    return strings;
  }
};

SpaceInfo parse_space(const json& v, const std::string& path, FileMeta& meta) {
  expect_object(v, path);
  const std::string type = as_string(require(v, path, "type"), path + "/type");
  SpaceInfo info{};
  if (type == "matrix") {
    reject_unknown_keys(v, path, {"type", "distances", "skip_validation"});
    if (const json* skip = find(v, "skip_validation"))
      meta.skip_validation = as_bool(*skip, path + "/skip_validation");
    const json& dist = expect_array(require(v, path, "distances"), path + "/distances");
    if (dist.empty()) fail(path + "/distances", "matrix must be non-empty");
    const std::size_t u = dist.size();
    std::vector<double> flat;
    flat.reserve(u * u);
    for (std::size_t i = 0; i < u; ++i) {
      const std::string row_path = path + "/distances/" + std::to_string(i);
      const json& row = expect_array(dist[i], row_path);
      if (row.size() != u)
        fail(row_path, "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(u));
      for (std::size_t j = 0; j < u; ++j) {
        const double d = as_double(row[j], row_path + "/" + std::to_string(j));
        if (!std::isfinite(d)) fail(row_path + "/" + std::to_string(j), "entry must be finite");
        flat.push_back(d);
      }
    }
    info.form = SpaceForm::Matrix;
    info.matrix = std::make_shared<MatrixSpace>(u, std::move(flat));
  } else if (type == "points") {
    reject_unknown_keys(v, path, {"type", "metric", "dim"});
    PointMetric metric;
    try {
      metric = point_metric_from_string(as_string(require(v, path, "metric"), path + "/metric"));
    } catch (const std::invalid_argument& e) {
      fail(path + "/metric", e.what());
    }
    const std::uint64_t dim = as_uint(require(v, path, "dim"), path + "/dim");
    if (dim == 0) fail(path + "/dim", "dimension must be positive");
    info.form = SpaceForm::Points;
    info.points = std::make_shared<PointSpace>(static_cast<std::size_t>(dim), metric);
  } else if (type == "strings") {
    reject_unknown_keys(v, path, {"type"});
    info.form = SpaceForm::Strings;
    info.strings = std::make_shared<StringSpace>();
  } else {
    fail(path + "/type", "unknown space type '" + type + "'");
  }
  return info;
}

ElementId parse_element(const json& v, const std::string& path, SpaceInfo& space) {
  switch (space.form) {
    case SpaceForm::Matrix: {
      const std::uint64_t id = as_uint(v, path);
      if (id >= space.matrix->size())
        fail(path, "element index " + std::to_string(id) + " outside universe of size " +
                       std::to_string(space.matrix->size()));
      return static_cast<ElementId>(id);
    }
    case SpaceForm::Points: {
      const json& arr = expect_array(v, path);
      std::vector<double> coords;
      coords.reserve(arr.size());
      for (std::size_t c = 0; c < arr.size(); ++c)
        coords.push_back(as_double(arr[c], path + "/" + std::to_string(c)));
      try {
        return space.points->intern(coords);
      } catch (const std::invalid_argument& e) {
        fail(path, e.what());
      }
    }
    case SpaceForm::Strings:
      return space.strings->intern(as_string(v, path));
  }
  fail(path, "unreachable");
}

FileMeta parse_metadata(const json* v, const std::string& path) {
  FileMeta meta;
  if (!v) return meta;
  expect_object(*v, path);
  reject_unknown_keys(*v, path, {"name", "seed", "rng"});
  if (const json* name = find(*v, "name")) meta.name = as_string(*name, path + "/name");
  if (const json* seed = find(*v, "seed")) meta.seed = as_uint(*seed, path + "/seed");
  if (const json* rng = find(*v, "rng")) meta.rng = as_string(*rng, path + "/rng");
  return meta;
}

void maybe_validate(const SpaceInfo& space, bool skip) {
  if (space.form != SpaceForm::Matrix || skip) return;
  MetricVerdict verdict = validate_metric(*space.matrix);
  if (verdict.valid()) return;
  std::ostringstream os;
  os << "metric validation failed: " << describe(verdict.witnesses.front());
  std::size_t total = 0;
  for (std::size_t c : verdict.counts_by_kind) total += c;
  if (total > 1) os << " (and " << (total - 1) << " further violations)";
  throw MetricValidationError(os.str(), std::move(verdict));
}

}  // namespace

ParsedInstance parse_instance(std::string_view json_text, bool force_skip_validation) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  expect_object(root, "");
  const std::uint64_t version = as_uint(require(root, "", "version"), "/version");
  if (version != 1) fail("/version", "unsupported version " + std::to_string(version));
  const std::string kind = as_string(require(root, "", "kind"), "/kind");

  FileMeta meta = parse_metadata(find(root, "metadata"), "/metadata");
  SpaceInfo space = parse_space(require(root, "", "space"), "/space", meta);

  if (kind == "similar") {
    reject_unknown_keys(root, "", {"version", "kind", "space", "metadata", "sets"});
    const json& sets_v = expect_array(require(root, "", "sets"), "/sets");
    if (sets_v.empty()) fail("/sets", "need at least one set");
    std::vector<std::vector<ElementId>> sets;
    sets.reserve(sets_v.size());
    for (std::size_t i = 0; i < sets_v.size(); ++i) {
      const std::string set_path = "/sets/" + std::to_string(i);
      const json& set_v = expect_array(sets_v[i], set_path);
      if (set_v.empty()) fail(set_path, "set must be non-empty");
      std::vector<ElementId> set;
      set.reserve(set_v.size());
      for (std::size_t j = 0; j < set_v.size(); ++j)
        set.push_back(parse_element(set_v[j], set_path + "/" + std::to_string(j), space));
      sets.push_back(std::move(set));
    }
    maybe_validate(space, meta.skip_validation || force_skip_validation);
    return {SimilarInstance(space.as_space(), std::move(sets)), std::move(meta)};
  }

  if (kind == "labeling") {
    reject_unknown_keys(root, "",
                        {"version", "kind", "space", "metadata", "labels", "node_costs", "masks"});
    if (space.form == SpaceForm::Matrix) {
      if (find(root, "labels"))
        fail("/labels", "a matrix space takes its labels from the matrix rows; remove 'labels'");
    } else {
      const json& labels_v = expect_array(require(root, "", "labels"), "/labels");
      if (labels_v.empty()) fail("/labels", "need at least one label");
      for (std::size_t l = 0; l < labels_v.size(); ++l) {
        const std::string label_path = "/labels/" + std::to_string(l);
        const ElementId id = parse_element(labels_v[l], label_path, space);
        if (id != l) fail(label_path, "duplicate label");
      }
    }
    const std::size_t k =
        space.form == SpaceForm::Matrix ? space.matrix->size() : space.as_space()->size();

    const json& costs_v = expect_array(require(root, "", "node_costs"), "/node_costs");
    if (costs_v.empty()) fail("/node_costs", "need at least one node");
    const std::size_t n = costs_v.size();
    std::vector<double> costs;
    costs.reserve(n * k);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_path = "/node_costs/" + std::to_string(i);
      const json& row = expect_array(costs_v[i], row_path);
      if (row.size() != k)
        fail(row_path,
             "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(k));
      for (std::size_t l = 0; l < k; ++l) {
        const std::string cell = row_path + "/" + std::to_string(l);
        const double c = as_double(row[l], cell);
        if (!std::isfinite(c) || c < 0.0) fail(cell, "cost must be non-negative and finite");
        costs.push_back(c);
      }
    }

    std::vector<std::vector<bool>> masks;
    if (const json* masks_v = find(root, "masks")) {
      expect_array(*masks_v, "/masks");
      if (masks_v->size() != n)
        fail("/masks", "expected one row per node (" + std::to_string(n) + ")");
      masks.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string row_path = "/masks/" + std::to_string(i);
        const json& row = expect_array((*masks_v)[i], row_path);
        if (row.size() != k)
          fail(row_path,
               "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(k));
        masks[i].resize(k);
        bool any = false;
        for (std::size_t l = 0; l < k; ++l) {
          masks[i][l] = as_bool(row[l], row_path + "/" + std::to_string(l));
          any = any || masks[i][l];
        }
        if (!any) fail(row_path, "mask row permits no label");
      }
    }

    maybe_validate(space, meta.skip_validation || force_skip_validation);
    return {LabelingInstance(space.as_space(), n, std::move(costs), std::move(masks)),
            std::move(meta)};
  }

  fail("/kind", "unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

struct ResolvedSpace {
  // Concrete space with ids mapped through any SubsetSpace view.
  const MatrixSpace* matrix = nullptr;
  const PointSpace* points = nullptr;
  const StringSpace* strings = nullptr;
  const SubsetSpace* subset = nullptr;

  ElementId resolve(ElementId id) const { return subset ? subset->member(id) : id; }
};

ResolvedSpace resolve_space(const MetricSpace& space) {
  ResolvedSpace r;
  const MetricSpace* base = &space;
  if (auto* s = dynamic_cast<const SubsetSpace*>(base)) {
    r.subset = s;
    base = &s->base();
  }
  r.matrix = dynamic_cast<const MatrixSpace*>(base);
  r.points = dynamic_cast<const PointSpace*>(base);
  r.strings = dynamic_cast<const StringSpace*>(base);
  if (!r.matrix && !r.points && !r.strings)
    throw std::invalid_argument("cannot serialize this metric space");
  return r;
}

json space_to_json(const MetricSpace& space, const ResolvedSpace& r, bool skip_validation) {
  json out;
  if (r.matrix && !r.subset) {
    out["type"] = "matrix";
    json rows = json::array();
    for (std::size_t i = 0; i < r.matrix->size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < r.matrix->size(); ++j) row.push_back(r.matrix->at(i, j));
      rows.push_back(std::move(row));
    }
    out["distances"] = std::move(rows);
  } else if (r.matrix) {
    // A matrix restricted to a label subset is materialized as a smaller matrix.
    out["type"] = "matrix";
    json rows = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < space.size(); ++j)
        row.push_back(space.distance(static_cast<ElementId>(i), static_cast<ElementId>(j)));
      rows.push_back(std::move(row));
    }
    out["distances"] = std::move(rows);
  } else if (r.points) {
    out["type"] = "points";
    out["metric"] = to_string(r.points->metric());
    out["dim"] = static_cast<std::uint64_t>(r.points->dimension());
  } else {
    out["type"] = "strings";
  }
  if (skip_validation && r.matrix) out["skip_validation"] = true;
  return out;
}

json element_to_json(const ResolvedSpace& r, ElementId id) {
  const ElementId base_id = r.resolve(id);
  if (r.matrix) return static_cast<std::uint64_t>(base_id);
  if (r.points) {
    json coords = json::array();
    for (double c : r.points->point(base_id)) coords.push_back(c);
    return coords;
  }
  return r.strings->str(base_id);
}

json metadata_to_json(const FileMeta& meta) {
  json out;
  if (meta.name) out["name"] = *meta.name;
  if (meta.seed) out["seed"] = *meta.seed;
  if (meta.rng) out["rng"] = *meta.rng;
  return out;
}

}  // namespace

std::string serialize_instance(const ParsedInstance& parsed) {
  json root;
  root["version"] = 1;
  root["kind"] = parsed.kind();
  json meta = metadata_to_json(parsed.meta);
  if (!meta.empty()) root["metadata"] = std::move(meta);

  if (parsed.is_similar()) {
    const SimilarInstance& inst = parsed.similar();
    const ResolvedSpace r = resolve_space(inst.space());
    root["space"] = space_to_json(inst.space(), r, parsed.meta.skip_validation);
    json sets = json::array();
    for (std::size_t i = 0; i < inst.n(); ++i) {
      json set = json::array();
      for (ElementId e : inst.set(i)) set.push_back(element_to_json(r, e));
      sets.push_back(std::move(set));
    }
    root["sets"] = std::move(sets);
  } else {
    const LabelingInstance& inst = parsed.labeling();
    const ResolvedSpace r = resolve_space(inst.space());
    root["space"] = space_to_json(inst.space(), r, parsed.meta.skip_validation);
    if (!r.matrix) {
      json labels = json::array();
      for (std::size_t l = 0; l < inst.k(); ++l)
        labels.push_back(element_to_json(r, static_cast<ElementId>(l)));
      root["labels"] = std::move(labels);
    }
    json costs = json::array();
    for (std::size_t i = 0; i < inst.n(); ++i) {
      json row = json::array();
      for (std::uint32_t l = 0; l < inst.k(); ++l) row.push_back(inst.cost(i, l));
      costs.push_back(std::move(row));
    }
    root["node_costs"] = std::move(costs);
    if (inst.has_masks()) {
      json masks = json::array();
      for (const auto& mask_row : inst.masks()) {
        json row = json::array();
        for (bool b : mask_row) row.push_back(b);
        masks.push_back(std::move(row));
      }
      root["masks"] = std::move(masks);
    }
  }
  return canonical_bytes(root);
}

ParsedInstance load_instance_file(const std::string& path, bool force_skip_validation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), force_skip_validation);
}

void write_instance_file(const std::string& path, const ParsedInstance& parsed) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize_instance(parsed);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace starsolve
