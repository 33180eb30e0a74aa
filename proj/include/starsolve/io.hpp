#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "starsolve/instance.hpp"
#include "starsolve/validate.hpp"

namespace starsolve {

// JSON instance files, version 1. Top-level keys:
//   version    mandatory, currently 1
//   kind       "similar" | "labeling"
//   space      {"type": "matrix", "distances": [[...]], "skip_validation"?: bool}
//            | {"type": "points", "metric": "l1"|"l2"|"linf", "dim": m}
//            | {"type": "strings"}
//   sets       (similar) n non-empty lists; entries are matrix row indices,
//              coordinate arrays, or strings, matching the space type
//   labels     (labeling, points/strings spaces) the k distinct labels;
//              for a matrix space the labels are the matrix rows
//   node_costs (labeling) n rows of k non-negative finite reals
//   masks      (labeling, optional) n rows of k booleans, each row with at
//              least one true
//   metadata   optional {"name"?: string, "seed"?: uint, "rng"?: string}
// Serialization is canonical: sorted keys, 2-space indent, LF line endings,
// floats as "<int>.0" when integral and %.17g otherwise, so
// serialize(parse(serialize(x))) is byte-identical to serialize(x).

/// Parse or schema failure; the message is path-qualified
/// ("/node_costs/2/0: ...").
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An explicit-matrix space failed the metric axioms at load time.
class MetricValidationError : public std::runtime_error {
 public:
  MetricValidationError(std::string message, MetricVerdict verdict)
      : std::runtime_error(std::move(message)), verdict(std::move(verdict)) {}
  MetricVerdict verdict;
};

struct FileMeta {
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rng;
  bool skip_validation = false;
};

struct ParsedInstance {
  std::variant<SimilarInstance, LabelingInstance> instance;
  FileMeta meta;

  bool is_similar() const { return std::holds_alternative<SimilarInstance>(instance); }
  const SimilarInstance& similar() const { return std::get<SimilarInstance>(instance); }
  const LabelingInstance& labeling() const { return std::get<LabelingInstance>(instance); }
  const char* kind() const { return is_similar() ? "similar" : "labeling"; }
};

/// Parses and validates an instance file. Matrix spaces run the exhaustive
/// metric check unless the file carries "skip_validation": true or
/// `force_skip_validation` is set.
ParsedInstance parse_instance(std::string_view json_text, bool force_skip_validation = false);

/// Canonical serialization (see format notes above).
std::string serialize_instance(const ParsedInstance& parsed);

ParsedInstance load_instance_file(const std::string& path, bool force_skip_validation = false);
void write_instance_file(const std::string& path, const ParsedInstance& parsed);

enum class Family { Points, RandomMetric, Strings };
enum class InstanceKind { Similar, Labeling };

const char* to_string(Family f);
Family family_from_string(std::string_view s);
const char* to_string(InstanceKind k);
InstanceKind instance_kind_from_string(std::string_view s);

/// Deterministic random instance description. The same spec always yields
/// the same instance (see rng.hpp).
struct GeneratorSpec {
  Family family = Family::Points;
  InstanceKind kind = InstanceKind::Similar;
  std::size_t n = 1;
  std::size_t k = 1;
  std::size_t dim = 2;                     // points family
  PointMetric metric = PointMetric::L2;    // points family
  std::uint64_t seed = 0;
  std::optional<std::string> name;
  /// Sets (or label count draws) of size exactly k instead of uniform 1..k;
  /// used by the scaling benchmark.
  bool fixed_set_size = false;
};

/// Builds an instance from a spec. Points are uniform in [0,1]^dim, strings
/// are 1-8 lowercase letters, and the random-metric family draws a symmetric
/// matrix over a universe of max(2, 2k) elements and applies Floyd-Warshall
/// metric closure, so the result always passes validate_metric. Labeling
/// node costs are uniform in [0, 10]; masks keep each label with probability
/// 1/2 and every row at least one label.
ParsedInstance generate(const GeneratorSpec& spec);

}  // namespace starsolve
