#include "rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "common.hpp"

namespace seaweed {

Series series_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Series::A;
    case 'B': case 'b': return Series::B;
    case 'C': case 'c': return Series::C;
    case 'D': case 'd': return Series::D;
    case 'E': case 'e': return Series::E;
    case 'F': case 'f': return Series::F;
    case 'G': case 'g': return Series::G;
    default:
      throw InvalidArgument(std::string("unknown series '") + c + "', expected one of A,B,C,D,E,F,G");
  }
}

char series_to_char(Series s) { return static_cast<char>(s); }

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

Root Root::negated() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

bool Root::operator<(const Root& o) const {
  if (height() != o.height()) return height() < o.height();
  return coeffs < o.coeffs;
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ")";
  return os.str();
}

void validate_type(Series series, int rank) {
  auto bad = [&](const std::string& constraint) {
    throw InvalidArgument(std::string("invalid type ") + series_to_char(series) + std::to_string(rank) +
                          ": " + constraint);
  };
  switch (series) {
    case Series::A: if (rank < 1) bad("series A needs rank >= 1"); break;
    case Series::B: if (rank < 2) bad("series B needs rank >= 2"); break;
    case Series::C: if (rank < 2) bad("series C needs rank >= 2"); break;
    case Series::D: if (rank < 3) bad("series D needs rank >= 3"); break;
    case Series::E: if (rank < 6 || rank > 8) bad("series E needs rank in {6,7,8}"); break;
    case Series::F: if (rank != 4) bad("series F needs rank 4"); break;
    case Series::G: if (rank != 2) bad("series G needs rank 2"); break;
  }
}

RootSystem::RootSystem(Series series, int rank) : series_(series), rank_(rank) {
  validate_type(series, rank);
  build_gram();
  generate_roots();
}

std::string RootSystem::type_name() const {
  return std::string(1, series_to_char(series_)) + std::to_string(rank_);
}

// Gram matrices of the simple roots, long roots normalized to (theta, theta) = 2.
void RootSystem::build_gram() {
  const int n = rank_;
  gram_.assign(n, std::vector<Rat>(n, Rat(0)));
  auto chain = [&](const Rat& link) {
    for (int i = 0; i + 1 < n; ++i) gram_[i][i + 1] = gram_[i + 1][i] = link;
  };
  switch (series_) {
    case Series::A:
      for (int i = 0; i < n; ++i) gram_[i][i] = 2;
      chain(-1);
      break;
    case Series::B:  // alpha_n short
      for (int i = 0; i < n; ++i) gram_[i][i] = (i == n - 1) ? Rat(1) : Rat(2);
      chain(-1);
      break;
    case Series::C:  // alpha_n long
      for (int i = 0; i < n; ++i) gram_[i][i] = (i == n - 1) ? Rat(2) : Rat(1);
      for (int i = 0; i + 1 < n; ++i)
        gram_[i][i + 1] = gram_[i + 1][i] = (i == n - 2) ? Rat(-1) : Rat(-1, 2);
      break;
    case Series::D:
      for (int i = 0; i < n; ++i) gram_[i][i] = 2;
      for (int i = 0; i + 1 < n - 1; ++i) gram_[i][i + 1] = gram_[i + 1][i] = -1;
      gram_[n - 3][n - 1] = gram_[n - 1][n - 3] = -1;
      break;
    case Series::E: {
      for (int i = 0; i < n; ++i) gram_[i][i] = 2;
      // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}};
      for (int k = 5; k <= n; ++k) edges.emplace_back(k - 1, k);
      for (auto [u, v] : edges) gram_[u - 1][v - 1] = gram_[v - 1][u - 1] = -1;
      break;
    }
    case Series::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      gram_[0][0] = gram_[1][1] = 2;
      gram_[2][2] = gram_[3][3] = 1;
      gram_[0][1] = gram_[1][0] = -1;
      gram_[1][2] = gram_[2][1] = -1;
      gram_[2][3] = gram_[3][2] = Rat(-1, 2);
      break;
    case Series::G:  // alpha_1 short, alpha_2 long
      gram_[0][0] = Rat(2, 3);
      gram_[1][1] = 2;
      gram_[0][1] = gram_[1][0] = -1;
      break;
  }

  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat a = 2 * gram_[i][j] / gram_[i][i];
      a.canonicalize();
      if (a.get_den() != 1) throw InternalError("non-integral Cartan entry in " + type_name());
      cartan_[i][j] = static_cast<int>(a.get_num().get_si());
    }
}

// Closure under simple-root addition, level by level via root strings.
void RootSystem::generate_roots() {
  const int n = rank_;
  std::set<std::vector<int>> seen;
  std::vector<Root> level;
  for (int i = 0; i < n; ++i) {
    Root a;
    a.coeffs.assign(n, 0);
    a.coeffs[i] = 1;
    level.push_back(a);
    seen.insert(a.coeffs);
  }
  positive_ = level;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& g : level) {
      for (int i = 0; i < n; ++i) {
        // p = how far the alpha_i-string through g extends downwards
        int p = 0;
        Root down = g;
        for (;;) {
          down.coeffs[i] -= 1;
          bool in = seen.count(down.coeffs) > 0;
          if (!in) {
            // also a root when it is the negated simple root (g == 2*alpha_i never occurs)
            Root neg = down.negated();
            in = neg.is_positive() && seen.count(neg.coeffs) > 0;
          }
          if (!in) break;
          ++p;
        }
        const int q = p - simple_pairing(g, i);
        if (q > 0) {
          Root up = g;
          up.coeffs[i] += 1;
          if (seen.insert(up.coeffs).second) next.push_back(up);
        }
      }
    }
    for (const Root& r : next) positive_.push_back(r);
    level = std::move(next);
  }
  std::sort(positive_.begin(), positive_.end());
  for (std::size_t k = 0; k < positive_.size(); ++k) positive_index_[positive_[k].coeffs] = static_cast<int>(k);
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const Root& r : positive_) out.push_back(r.negated());
  return out;
}

Root RootSystem::simple_root(int i) const {
  Root r;
  r.coeffs.assign(rank_, 0);
  r.coeffs[i] = 1;
  return r;
}

Rat RootSystem::inner(const Root& x, const Root& y) const {
  if (static_cast<int>(x.coeffs.size()) != rank_ || static_cast<int>(y.coeffs.size()) != rank_)
    throw InvalidArgument("inner: coefficient vector length does not match rank");
  Rat v = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y.coeffs[j] == 0) continue;
      v += Rat(x.coeffs[i]) * Rat(y.coeffs[j]) * gram_[i][j];
    }
  }
  return v;
}

int RootSystem::simple_pairing(const Root& x, int i) const {
  long v = 0;
  for (int j = 0; j < rank_; ++j) v += static_cast<long>(x.coeffs[j]) * cartan_[i][j];
  return static_cast<int>(v);
}

Rat RootSystem::pairing(const Root& x, const Root& y) const {
  return 2 * inner(x, y) / inner(y, y);
}

bool RootSystem::is_positive_root(const Root& r) const { return positive_index_.count(r.coeffs) > 0; }

bool RootSystem::is_root(const Root& r) const {
  if (is_positive_root(r)) return true;
  return positive_index_.count(r.negated().coeffs) > 0;
}

int RootSystem::positive_index(const Root& r) const {
  auto it = positive_index_.find(r.coeffs);
  return it == positive_index_.end() ? -1 : it->second;
}

Root RootSystem::reflect(const Root& x, int i) const {
  Root r = x;
  r.coeffs[i] -= simple_pairing(x, i);
  return r;
}

const Root& RootSystem::highest_root() const { return positive_.back(); }

std::optional<int> RootSystem::theta_attachment() const {
  const Root& theta = highest_root();
  int attach = -1;
  for (int i = 0; i < rank_; ++i) {
    if (inner(theta, simple_root(i)) != 0) {
      if (attach >= 0) return std::nullopt;  // not unique (series A, rank >= 2)
      attach = i;
    }
  }
  if (attach < 0) return std::nullopt;
  if (pairing(theta, simple_root(attach)) != 1) return std::nullopt;  // theta not fundamental
  return attach;
}

std::vector<RootSystem::Component> RootSystem::irreducible_components(
    const std::vector<Root>& carrier) const {
  std::set<std::vector<int>> in_carrier;
  for (const Root& r : carrier) in_carrier.insert(r.coeffs);

  std::vector<Root> positive;
  for (const Root& r : carrier)
    if (r.is_positive()) positive.push_back(r);
  std::sort(positive.begin(), positive.end());

  // simple system of the subsystem: positive elements not a sum of two others
  std::set<std::vector<int>> pos_set;
  for (const Root& r : positive) pos_set.insert(r.coeffs);
  std::vector<Root> simples;
  for (const Root& g : positive) {
    bool decomposable = false;
    for (const Root& d : positive) {
      if (d == g) continue;
      Root rest = g - d;
      if (pos_set.count(rest.coeffs)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(g);
  }

  // connected components of the non-orthogonality graph on the simples
  const int s = static_cast<int>(simples.size());
  std::vector<int> comp(s, -1);
  int ncomp = 0;
  for (int i = 0; i < s; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack = {i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < s; ++v)
        if (comp[v] < 0 && inner(simples[u], simples[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  std::vector<Component> out(ncomp);
  for (int i = 0; i < s; ++i) out[comp[i]].simples.push_back(simples[i]);

  // every root joins the unique component it is not orthogonal to
  for (const Root& g : positive) {
    int home = -1;
    for (int i = 0; i < s && home < 0; ++i)
      if (inner(g, simples[i]) != 0) home = comp[i];
    if (home < 0) throw InternalError("irreducible_components: root orthogonal to every simple: " + g.to_string());
    out[home].roots.push_back(g);
    out[home].roots.push_back(g.negated());
  }

  // highest root of a component: the unique positive element gamma such that
  // gamma + s stays outside the subsystem for every simple s of the component
  for (Component& c : out) {
    std::vector<Root> candidates;
    for (const Root& g : c.roots) {
      if (!g.is_positive()) continue;
      bool maximal = true;
      for (const Root& sr : c.simples)
        if (in_carrier.count((g + sr).coeffs)) {
          maximal = false;
          break;
        }
      if (maximal) candidates.push_back(g);
    }
    if (candidates.size() != 1)
      throw InternalError("irreducible_components: component without a unique highest root");
    c.highest = candidates.front();
  }

  // deterministic order: height of highest root descending, then lex descending
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.highest.height() != b.highest.height()) return a.highest.height() > b.highest.height();
    return a.highest.coeffs > b.highest.coeffs;
  });
  return out;
}

std::vector<RootSystem::Component> RootSystem::orthogonal_subsystem(const std::vector<Root>& carrier,
                                                                    const Root& pivot) const {
  bool found = false;
  for (const Root& r : carrier)
    if (r == pivot) {
      found = true;
      break;
    }
  if (!found) throw InvalidArgument("orthogonal_subsystem: pivot " + pivot.to_string() + " not in carrier");

  std::vector<Root> orth;
  for (const Root& r : carrier)
    if (inner(r, pivot) == 0) orth.push_back(r);
  return irreducible_components(orth);
}

}  // namespace seaweed
