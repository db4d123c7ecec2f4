#include "seaweed.h"

#include <cstring>
#include <string>

#include "cascade.hpp"
#include "chevalley.hpp"
#include "coadjoint.hpp"
#include "common.hpp"
#include "genstab.hpp"
#include "report.hpp"
#include "rootsys.hpp"
#include "seaweed_spec.hpp"

using namespace seaweed;

struct sw_root_system {
  RootSystem rs;
};

struct sw_algebra {
  Algebra alg;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
sw_status guarded(F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return SW_ERROR_INVALID_ARGUMENT;
  } catch (const InternalError& e) {
    g_last_error = e.what();
    return SW_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SW_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OracleOptions to_options(const sw_oracle_options* opts) {
  OracleOptions o;
  if (opts) {
    o.seed = opts->seed;
    o.trials = opts->trials;
    o.coeff_bound = static_cast<long>(opts->coeff_bound);
  }
  return o;
}

Composition to_composition(const int32_t* parts, int32_t len) {
  if (!parts || len < 1) throw InvalidArgument("composition: null or empty");
  Composition c;
  for (int32_t i = 0; i < len; ++i) {
    if (parts[i] < 1) throw InvalidArgument("composition: parts must be positive");
    c.parts.push_back(parts[i]);
  }
  return c;
}

std::set<int> to_set(const int32_t* v, int32_t len) {
  std::set<int> out;
  for (int32_t i = 0; i < len; ++i) out.insert(v[i]);
  return out;
}

IndexRequest::Method parse_method(const char* method) {
  const std::string m = method ? method : "both";
  if (m == "inductive") return IndexRequest::Method::Inductive;
  if (m == "oracle") return IndexRequest::Method::Oracle;
  if (m == "both") return IndexRequest::Method::Both;
  throw InvalidArgument("method must be one of inductive|oracle|both, got '" + m + "'");
}

std::string parse_format(const char* format, bool allow_dot) {
  const std::string f = format ? format : "text";
  if (f == "text" || f == "json" || (allow_dot && f == "dot")) return f;
  throw InvalidArgument("unknown format '" + f + "'");
}

IndexRequest standard_request(char series, int32_t rank, const int32_t* marked, int32_t mlen,
                              const int32_t* lower_levi, int32_t llen, IndexRequest::Method method) {
  IndexRequest req;
  req.kind = IndexRequest::Kind::Standard;
  req.method = method;
  req.series = series_from_char(series);
  req.rank = rank;
  req.marked = to_set(marked, mlen);
  if (lower_levi && llen >= 0) req.lower_levi = to_set(lower_levi, llen);
  return req;
}

}  // namespace

extern "C" {

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "ok";
    case SW_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SW_ERROR_DISAGREEMENT: return "method disagreement";
    case SW_NOT_APPLICABLE: return "not applicable";
    case SW_ERROR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* sw_last_error(void) { return g_last_error.c_str(); }

void sw_string_free(char* s) { delete[] s; }

void sw_oracle_options_init(sw_oracle_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->trials = 8;
  opts->coeff_bound = 10000;
}

sw_status sw_root_system_new(char series, int32_t rank, sw_root_system** out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    *out = new sw_root_system{RootSystem(series_from_char(series), rank)};
    return SW_OK;
  });
}

void sw_root_system_free(sw_root_system* rs) { delete rs; }

int32_t sw_root_system_rank(const sw_root_system* rs) { return rs ? rs->rs.rank() : -1; }

int32_t sw_root_system_positive_roots(const sw_root_system* rs) {
  return rs ? static_cast<int32_t>(rs->rs.positive_roots().size()) : -1;
}

int32_t sw_root_system_cascade_size(const sw_root_system* rs) {
  if (!rs) return -1;
  return build_cascade(rs->rs).size();
}

sw_status sw_algebra_new(const sw_root_system* rs, sw_algebra** out) {
  return guarded([&]() {
    if (!rs || !out) throw InvalidArgument("null pointer");
    *out = new sw_algebra{Algebra::chevalley(rs->rs)};
    return SW_OK;
  });
}

void sw_algebra_free(sw_algebra* alg) { delete alg; }

int32_t sw_algebra_dim(const sw_algebra* alg) { return alg ? alg->alg.dim() : -1; }

sw_status sw_borel_index_oracle(const sw_algebra* alg, const sw_oracle_options* opts, int64_t* out) {
  return guarded([&]() {
    if (!alg || !out) throw InvalidArgument("null pointer");
    *out = index_oracle(borel_subalgebra(alg->alg), to_options(opts)).index;
    return SW_OK;
  });
}

sw_status sw_index_gl_inductive(const int32_t* a, int32_t alen, const int32_t* b, int32_t blen,
                                int64_t* out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    *out = index_gl(make_gl_seaweed(to_composition(a, alen), to_composition(b, blen)));
    return SW_OK;
  });
}

sw_status sw_index_gl_oracle(const int32_t* a, int32_t alen, const int32_t* b, int32_t blen,
                             const sw_oracle_options* opts, int64_t* out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    const GlSeaweed sw = make_gl_seaweed(to_composition(a, alen), to_composition(b, blen));
    const Algebra gl = Algebra::gl(sw.n());
    *out = index_oracle(realize_gl(gl, sw), to_options(opts)).index;
    return SW_OK;
  });
}

sw_status sw_index_standard_inductive(char series, int32_t rank, const int32_t* marked, int32_t mlen,
                                      const int32_t* lower_levi, int32_t llen, int64_t* out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    IndexRequest req = standard_request(series, rank, marked, mlen, lower_levi, llen,
                                        IndexRequest::Method::Inductive);
    OracleOptions opts;
    const IndexOutcome outcome = compute_index(req, opts);
    if (!outcome.inductive) return SW_NOT_APPLICABLE;
    *out = *outcome.inductive;
    return SW_OK;
  });
}

sw_status sw_index_standard_oracle(char series, int32_t rank, const int32_t* marked, int32_t mlen,
                                   const int32_t* lower_levi, int32_t llen,
                                   const sw_oracle_options* opts, int64_t* out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    IndexRequest req =
        standard_request(series, rank, marked, mlen, lower_levi, llen, IndexRequest::Method::Oracle);
    const IndexOutcome outcome = compute_index(req, to_options(opts));
    *out = *outcome.oracle;
    return SW_OK;
  });
}

sw_status sw_index_report_gl(const int32_t* a, int32_t alen, const int32_t* b, int32_t blen,
                             const char* method, const sw_oracle_options* opts, const char* format,
                             char** out, int32_t* agree) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    IndexRequest req;
    req.kind = IndexRequest::Kind::Gl;
    req.method = parse_method(method);
    req.a = to_composition(a, alen);
    req.b = to_composition(b, blen);
    make_gl_seaweed(req.a, req.b);  // validates totals
    const std::string fmt = parse_format(format, false);
    const OracleOptions o = to_options(opts);
    const IndexOutcome outcome = compute_index(req, o);
    *out = dup_string(render_index(req, outcome, o, fmt));
    if (agree) *agree = outcome.disagreement() ? 0 : 1;
    return outcome.disagreement() ? SW_ERROR_DISAGREEMENT : SW_OK;
  });
}

sw_status sw_index_report_standard(char series, int32_t rank, const int32_t* marked, int32_t mlen,
                                   const int32_t* lower_levi, int32_t llen, const char* method,
                                   const sw_oracle_options* opts, const char* format, char** out,
                                   int32_t* agree) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    IndexRequest req =
        standard_request(series, rank, marked, mlen, lower_levi, llen, parse_method(method));
    const std::string fmt = parse_format(format, false);
    const OracleOptions o = to_options(opts);
    const IndexOutcome outcome = compute_index(req, o);
    *out = dup_string(render_index(req, outcome, o, fmt));
    if (agree) *agree = outcome.disagreement() ? 0 : 1;
    return outcome.disagreement() ? SW_ERROR_DISAGREEMENT : SW_OK;
  });
}

sw_status sw_cascade_report(char series, int32_t rank, const char* format, char** out) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    const RootSystem rs(series_from_char(series), rank);
    *out = dup_string(cascade_report(rs, parse_format(format, true)));
    return SW_OK;
  });
}

sw_status sw_counterexample_report(char series, int32_t rank, int32_t samples,
                                   const sw_oracle_options* opts, const char* format, char** out,
                                   int32_t* confirmed) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    if (samples < 0) throw InvalidArgument("samples must be >= 0");
    const std::string fmt = parse_format(format, false);
    const RootSystem rs(series_from_char(series), rank);
    if (!rs.theta_attachment())
      throw InvalidArgument("theta is not a fundamental weight for " + rs.type_name() +
                            "; the construction needs series B (rank >= 3), D, E, F or G");
    const Algebra alg = Algebra::chevalley(rs);
    const CounterexampleReport rep =
        run_counterexample(rs, alg, default_samples(samples == 0 ? 8 : samples), to_options(opts));
    *out = dup_string(render_counterexample(rep, fmt));
    if (confirmed) *confirmed = rep.confirmed ? 1 : 0;
    return rep.confirmed ? SW_OK : SW_ERROR_DISAGREEMENT;
  });
}

sw_status sw_enumerate_gl(int32_t n, const sw_oracle_options* opts, const char* format,
                          int32_t include_entries, char** out, int32_t* disagreements) {
  return guarded([&]() {
    if (!out) throw InvalidArgument("output pointer is null");
    const std::string fmt = parse_format(format, false);
    const EnumerateOutcome outcome = enumerate_gl(n, to_options(opts));
    *out = dup_string(render_enumerate(outcome, fmt, include_entries != 0));
    if (disagreements) *disagreements = static_cast<int32_t>(outcome.disagreements);
    return (outcome.disagreements == 0 && outcome.bound_ok) ? SW_OK : SW_ERROR_DISAGREEMENT;
  });
}

}  // extern "C"
