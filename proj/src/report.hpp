// Report assembly shared by the C API: runs the index/cascade/counterexample/
// enumerate pipelines and renders them as stable text, JSON or DOT.
#pragma once

#include <optional>
#include <set>
#include <string>

#include "coadjoint.hpp"
#include "genstab.hpp"
#include "seaweed_spec.hpp"

namespace seaweed {

struct IndexRequest {
  enum class Kind { Gl, Standard };
  enum class Method { Inductive, Oracle, Both };

  Kind kind = Kind::Gl;
  Method method = Method::Both;

  // Kind::Gl
  Composition a, b;

  // Kind::Standard; marked/lower_levi are 1-based simple-root indices,
  // lower_levi = nullopt means the lower parabolic is all of g
  Series series = Series::A;
  int rank = 0;
  std::set<int> marked;
  std::optional<std::set<int>> lower_levi;
};

struct IndexOutcome {
  std::optional<long> inductive;  // absent when the inductive route does not apply
  std::optional<long> oracle;
  std::optional<bool> agree;      // present when both methods ran
  std::vector<std::string> notes;

  bool disagreement() const { return agree.has_value() && !*agree; }
};

IndexOutcome compute_index(const IndexRequest& req, const OracleOptions& opts);
std::string render_index(const IndexRequest& req, const IndexOutcome& out, const OracleOptions& opts,
                         const std::string& format);  // text | json

std::string cascade_report(const RootSystem& rs, const std::string& format);  // text | json | dot

std::string render_counterexample(const CounterexampleReport& rep, const std::string& format);

struct EnumerateEntry {
  Composition a, b;
  long inductive = 0;
  long oracle = 0;
  bool agree = false;
};

struct EnumerateOutcome {
  int n = 0;
  long pairs = 0;
  long disagreements = 0;
  long reductive_pairs = 0;      // a == b
  long index_equals_n = 0;       // entries with index == n
  bool bound_ok = false;         // index <= n everywhere, equality exactly when a == b
  std::vector<EnumerateEntry> entries;
};

EnumerateOutcome enumerate_gl(int n, const OracleOptions& opts);
std::string render_enumerate(const EnumerateOutcome& out, const std::string& format, bool include_entries);

}  // namespace seaweed
