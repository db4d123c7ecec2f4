#include "report.hpp"

#include <json.hpp>

#include <sstream>

#include "cascade.hpp"
#include "common.hpp"

namespace seaweed {

using ordered_json = nlohmann::ordered_json;

namespace {

std::set<int> to_zero_based(const std::set<int>& s) {
  std::set<int> out;
  for (int v : s) out.insert(v - 1);
  return out;
}

std::set<int> full_set(int rank) {
  std::set<int> out;
  for (int i = 1; i <= rank; ++i) out.insert(i);
  return out;
}

std::set<int> complement(const std::set<int>& s, int rank) {
  std::set<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!s.count(i)) out.insert(i);
  return out;
}

ordered_json int_set_json(const std::set<int>& s) {
  ordered_json arr = ordered_json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

ordered_json composition_json(const Composition& c) {
  ordered_json arr = ordered_json::array();
  for (int p : c.parts) arr.push_back(p);
  return arr;
}

std::string format_set(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int v : s) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

void validate_standard_request(const IndexRequest& req) {
  validate_type(req.series, req.rank);
  for (int m : req.marked)
    if (m < 1 || m > req.rank) throw InvalidArgument("marked index out of range 1.." + std::to_string(req.rank));
  if (req.lower_levi)
    for (int m : *req.lower_levi)
      if (m < 1 || m > req.rank) throw InvalidArgument("lower Levi index out of range 1.." + std::to_string(req.rank));
}

}  // namespace

IndexOutcome compute_index(const IndexRequest& req, const OracleOptions& opts) {
  IndexOutcome out;
  const bool want_inductive = req.method != IndexRequest::Method::Oracle;
  const bool want_oracle = req.method != IndexRequest::Method::Inductive;
  bool fallback_oracle = false;

  if (req.kind == IndexRequest::Kind::Gl) {
    const GlSeaweed sw = make_gl_seaweed(req.a, req.b);
    if (classify(sw) == GlClass::Reductive)
      out.notes.push_back("reductive (Levi) seaweed: index = rank");
    if (want_inductive) out.inductive = index_gl(sw);
    if (want_oracle) {
      const Algebra gl = Algebra::gl(sw.n());
      out.oracle = index_oracle(realize_gl(gl, sw), opts).index;
    }
  } else {
    validate_standard_request(req);
    const std::set<int> lower = req.lower_levi ? *req.lower_levi : full_set(req.rank);
    const bool parabolic = static_cast<int>(lower.size()) == req.rank;
    if (complement(req.marked, req.rank) == lower)
      out.notes.push_back("reductive (Levi) seaweed: index = rank");

    if (want_inductive) {
      switch (req.series) {
        case Series::A: {
          // gl bridge: compositions from the cut points of both parabolics;
          // the one-dimensional centre accounts for ind_gl = ind_sl + 1
          const int ngl = req.rank + 1;
          const Composition a = composition_from_marked(ngl, req.marked);
          const Composition b = composition_from_marked(ngl, complement(lower, req.rank));
          out.inductive = index_gl(make_gl_seaweed(a, b)) - 1;
          break;
        }
        case Series::C:
          if (parabolic) {
            out.inductive = index_parabolic_sp(req.rank, req.marked);
          } else {
            out.notes.push_back("inductive reduction for non-parabolic sp seaweeds is not implemented; using the oracle");
            fallback_oracle = true;
          }
          break;
        case Series::B:
        case Series::D:
          if (parabolic) {
            const auto v = index_parabolic_so(req.series, req.rank, req.marked);
            if (v) {
              out.inductive = *v;
            } else {
              out.notes.push_back("inductive method not applicable (parity condition fails); using the oracle");
              fallback_oracle = true;
            }
          } else {
            out.notes.push_back("inductive reduction for non-parabolic so seaweeds is not implemented; using the oracle");
            fallback_oracle = true;
          }
          break;
        default:
          out.notes.push_back("no inductive formula for this series; using the oracle");
          fallback_oracle = true;
          break;
      }
    }

    if (want_oracle || fallback_oracle) {
      const RootSystem rs(req.series, req.rank);
      const Algebra alg = Algebra::chevalley(rs);
      const Subalgebra sub =
          realize_standard(alg, to_zero_based(complement(req.marked, req.rank)), to_zero_based(lower));
      out.oracle = index_oracle(sub, opts).index;
    }
  }

  if (out.inductive && out.oracle) out.agree = *out.inductive == *out.oracle;
  return out;
}

std::string render_index(const IndexRequest& req, const IndexOutcome& out, const OracleOptions& opts,
                         const std::string& format) {
  const char* method = req.method == IndexRequest::Method::Inductive ? "inductive"
                       : req.method == IndexRequest::Method::Oracle  ? "oracle"
                                                                     : "both";
  if (format == "json") {
    ordered_json j;
    j["command"] = "index";
    if (req.kind == IndexRequest::Kind::Gl) {
      j["spec"] = {{"kind", "gl"}, {"n", req.a.total()}, {"a", composition_json(req.a)}, {"b", composition_json(req.b)}};
    } else {
      j["spec"] = {{"kind", "standard"},
                   {"series", std::string(1, series_to_char(req.series))},
                   {"rank", req.rank},
                   {"marked", int_set_json(req.marked)},
                   {"lower_levi", req.lower_levi ? int_set_json(*req.lower_levi) : int_set_json(full_set(req.rank))}};
    }
    j["method"] = method;
    j["inductive"] = out.inductive ? ordered_json(*out.inductive) : ordered_json(nullptr);
    j["oracle"] = out.oracle ? ordered_json(*out.oracle) : ordered_json(nullptr);
    j["agree"] = out.agree ? ordered_json(*out.agree) : ordered_json(nullptr);
    j["seed"] = opts.seed;
    j["trials"] = opts.trials;
    j["coeff_bound"] = opts.coeff_bound;
    j["notes"] = out.notes;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  if (req.kind == IndexRequest::Kind::Gl) {
    os << "spec: " << GlSeaweed{req.a, req.b}.to_string() << " in gl_" << req.a.total() << "\n";
  } else {
    os << "spec: standard seaweed of " << series_to_char(req.series) << req.rank << ", marked "
       << format_set(req.marked);
    if (req.lower_levi) os << ", lower Levi " << format_set(*req.lower_levi);
    os << "\n";
  }
  os << "method: " << method << "\n";
  for (const std::string& n : out.notes) os << "note: " << n << "\n";
  if (out.inductive) os << "inductive: " << *out.inductive << "\n";
  if (out.oracle)
    os << "oracle: " << *out.oracle << " (seed=" << opts.seed << ", trials=" << opts.trials
       << ", coeff_bound=" << opts.coeff_bound << ")\n";
  if (out.agree) os << "agree: " << (*out.agree ? "yes" : "NO") << "\n";
  return os.str();
}

std::string cascade_report(const RootSystem& rs, const std::string& format) {
  const CascadePoset poset = build_cascade(rs);
  if (format == "dot") return emit_hasse_dot(rs, poset);

  const BorelIndexResult bi = borel_index(rs);
  const auto expansion = alpha_expansion(rs);

  if (format == "json") {
    ordered_json j;
    j["command"] = "cascade";
    j["series"] = std::string(1, series_to_char(rs.series()));
    j["rank"] = rs.rank();
    j["l"] = bi.l;
    j["ind_b"] = bi.ind_b;
    j["h_dim"] = bi.ind_b;
    ordered_json roots = ordered_json::array();
    for (int i = 0; i < poset.size(); ++i) {
      ordered_json r;
      r["index"] = i + 1;
      r["coeffs"] = poset.roots[i].coeffs;
      r["parent"] = poset.parent[i] < 0 ? ordered_json(nullptr) : ordered_json(poset.parent[i] + 1);
      roots.push_back(r);
    }
    j["roots"] = roots;
    if (expansion) {
      ordered_json e;
      e["alpha"] = expansion->alpha.coeffs;
      ordered_json ks = ordered_json::array();
      for (const Rat& k : expansion->k) ks.push_back(rat_to_string(k));
      e["k"] = ks;
      ordered_json is = ordered_json::array();
      for (int i : expansion->I) is.push_back(i + 1);
      e["I"] = is;
      j["alpha_expansion"] = e;
    } else {
      j["alpha_expansion"] = nullptr;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "type: " << rs.type_name() << "\n";
  os << "l: " << bi.l << "\n";
  os << "ind_b: " << bi.ind_b << "\n";
  os << "cascade:\n";
  for (int i = 0; i < poset.size(); ++i) {
    os << "  mu" << i + 1 << " " << poset.roots[i].to_string();
    if (poset.parent[i] >= 0)
      os << " covered by mu" << poset.parent[i] + 1;
    os << "\n";
  }
  if (expansion) {
    os << "alpha expansion: alpha = " << expansion->alpha.to_string() << "; k =";
    for (std::size_t i = 0; i < expansion->k.size(); ++i)
      os << (i ? ", " : " ") << rat_to_string(expansion->k[i]);
    os << "; I = {";
    for (std::size_t i = 0; i < expansion->I.size(); ++i) os << (i ? "," : "") << expansion->I[i] + 1;
    os << "}\n";
  } else {
    os << "alpha expansion: not applicable (theta is not a fundamental weight)\n";
  }
  return os.str();
}

std::string render_counterexample(const CounterexampleReport& rep, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["command"] = "counterexample";
    j["series"] = std::string(1, series_to_char(rep.series));
    j["rank"] = rep.rank;
    j["dim_p"] = rep.dim_p;
    j["ind_b"] = rep.ind_b;
    j["ind_p"] = rep.ind_p;
    j["ind_relation_ok"] = rep.ind_relation_ok;
    ordered_json samples = ordered_json::array();
    for (const SampleReport& s : rep.samples) {
      ordered_json e;
      e["a"] = rat_to_string(s.a);
      e["stabiliser_dim"] = s.stabiliser_dim;
      e["dim_ok"] = s.dim_ok;
      e["h_contained"] = s.h_contained;
      e["support_ok"] = s.support_ok;
      e["mu_part_ok"] = s.mu_part_ok;
      e["eigen_ok"] = s.eigen_ok;
      e["tauvel_yu_ok"] = s.tauvel_yu_ok;
      samples.push_back(e);
    }
    j["samples"] = samples;
    j["density_rank"] = rep.density;
    j["density_ok"] = rep.density_ok;
    j["verdict"] = rep.confirmed ? "confirmed" : "FAILED";
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "type: " << series_to_char(rep.series) << rep.rank << "\n";
  os << "dim_p: " << rep.dim_p << "\n";
  os << "ind_b: " << rep.ind_b << "\n";
  os << "ind_p: " << rep.ind_p << (rep.ind_relation_ok ? " (= ind_b + 1)" : " (relation FAILS)") << "\n";
  os << "samples:\n";
  for (const SampleReport& s : rep.samples) {
    os << "  a = " << rat_to_string(s.a) << ": stab_dim = " << s.stabiliser_dim << ", "
       << (s.all_ok() ? "ok" : "FAILED") << "\n";
  }
  os << "density rank: " << rep.density << " / " << rep.dim_p << "\n";
  os << "verdict: " << (rep.confirmed ? "confirmed" : "FAILED") << "\n";
  return os.str();
}

EnumerateOutcome enumerate_gl(int n, const OracleOptions& opts) {
  if (n < 1 || n > 8) throw InvalidArgument("enumerate: n must be between 1 and 8");
  EnumerateOutcome out;
  out.n = n;
  out.bound_ok = true;
  const Algebra gl = Algebra::gl(n);
  const std::vector<Composition> comps = all_compositions(n);
  for (const Composition& a : comps)
    for (const Composition& b : comps) {
      EnumerateEntry e;
      e.a = a;
      e.b = b;
      const GlSeaweed sw = make_gl_seaweed(a, b);
      e.inductive = index_gl(sw);
      e.oracle = index_oracle(realize_gl(gl, sw), opts).index;
      e.agree = e.inductive == e.oracle;
      ++out.pairs;
      if (!e.agree) ++out.disagreements;
      const bool reductive = a == b;
      if (reductive) ++out.reductive_pairs;
      if (e.inductive == n) ++out.index_equals_n;
      if (e.inductive > n || (e.inductive == n) != reductive) out.bound_ok = false;
      out.entries.push_back(std::move(e));
    }
  return out;
}

std::string render_enumerate(const EnumerateOutcome& out, const std::string& format, bool include_entries) {
  if (format == "json") {
    ordered_json j;
    j["command"] = "enumerate";
    j["n"] = out.n;
    j["pairs"] = out.pairs;
    j["disagreements"] = out.disagreements;
    j["reductive_pairs"] = out.reductive_pairs;
    j["index_equals_n"] = out.index_equals_n;
    j["bound_ok"] = out.bound_ok;
    if (include_entries) {
      ordered_json entries = ordered_json::array();
      for (const EnumerateEntry& e : out.entries) {
        ordered_json o;
        o["a"] = composition_json(e.a);
        o["b"] = composition_json(e.b);
        o["inductive"] = e.inductive;
        o["oracle"] = e.oracle;
        o["agree"] = e.agree;
        entries.push_back(o);
      }
      j["entries"] = entries;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "gl_" << out.n << ": " << out.pairs << " composition pairs\n";
  if (include_entries)
    for (const EnumerateEntry& e : out.entries)
      os << "  s(" << e.a.to_string() << "|" << e.b.to_string() << "): inductive " << e.inductive
         << ", oracle " << e.oracle << (e.agree ? "" : "  DISAGREE") << "\n";
  os << "agreements: " << out.pairs - out.disagreements << " / " << out.pairs << "\n";
  os << "reductive pairs (a = b): " << out.reductive_pairs << "\n";
  os << "pairs with index = n: " << out.index_equals_n << "\n";
  os << "bound ind <= n with equality iff reductive: " << (out.bound_ok ? "holds" : "VIOLATED") << "\n";
  return os.str();
}

}  // namespace seaweed
