#include "toricmin/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "toricmin/exact.hpp"

namespace toricmin::morse {

namespace {

bool alternating_cycle(const AcyclicCategory& c, const std::vector<bool>& in_matching) {
  const int n = c.object_count();
  std::vector<std::set<int>> adj(n);
  for (int m = 0; m < c.morphism_count(); ++m) {
    if (in_matching[m]) adj[c.target(m)].insert(c.source(m));
    else adj[c.source(m)].insert(c.target(m));
  }
  // iterative three-colour DFS
  std::vector<int> colour(n, 0);
  for (int s = 0; s < n; ++s) {
    if (colour[s]) continue;
    std::vector<std::pair<int, std::set<int>::const_iterator>> stack{{s, adj[s].begin()}};
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == adj[v].end()) {
        colour[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = *it++;
      if (colour[w] == 1) return true;
      if (colour[w] == 0) {
        colour[w] = 1;
        stack.push_back({w, adj[w].begin()});
      }
    }
  }
  return false;
}

std::vector<int> matched_extension(const AcyclicCategory& c, const std::vector<int>& matching) {
  const int n = c.object_count();
  std::vector<int> node(n, -1), partner(n, -1);
  int nodes = 0;
  for (int m : matching) {
    partner[c.source(m)] = c.target(m);
    partner[c.target(m)] = c.source(m);
    node[c.source(m)] = node[c.target(m)] = nodes++;
  }
  std::vector<int> rep;  // smallest object of each node
  for (int m : matching) rep.push_back(std::min(c.source(m), c.target(m)));
  for (int x = 0; x < n; ++x)
    if (node[x] < 0) {
      node[x] = nodes++;
      rep.push_back(x);
    }
  std::vector<std::set<int>> adj(nodes);
  std::vector<int> indeg(nodes, 0);
  for (int m = 0; m < c.morphism_count(); ++m) {
    int a = node[c.source(m)], b = node[c.target(m)];
    if (a == b) continue;
    if (adj[a].insert(b).second) ++indeg[b];
  }
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int v = 0; v < nodes; ++v)
    if (indeg[v] == 0) ready.push({rep[v], v});
  std::vector<int> order;
  std::vector<bool> emitted(n, false);
  while (!ready.empty()) {
    int v = ready.top().second;
    ready.pop();
    int x = rep[v];
    if (partner[x] >= 0) {
      int lo = x, hi = partner[x];
      if (c.rank(lo) > c.rank(hi)) std::swap(lo, hi);
      order.push_back(lo);
      order.push_back(hi);
    } else {
      order.push_back(x);
    }
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.push({rep[w], w});
  }
  if (static_cast<int>(order.size()) != n) return {};
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int m = 0; m < c.morphism_count(); ++m)
    if (pos[c.source(m)] >= pos[c.target(m)]) return {};
  for (int m : matching)
    if (pos[c.target(m)] != pos[c.source(m)] + 1) return {};
  return order;
}

}  // namespace

MatchingReport validate_matching(const AcyclicCategory& c, const std::vector<int>& matching) {
  MatchingReport r;
  const int n = c.object_count();
  std::vector<bool> used(n, false), in_matching(c.morphism_count(), false);
  auto fail = [&](const std::string& why) {
    r.valid = false;
    r.reason = why;
    return r;
  };
  for (int m : matching) {
    if (m < 0 || m >= c.morphism_count()) return fail("matched morphism out of range");
    if (!c.indecomposable(m)) return fail("matched morphism is decomposable");
    if (used[c.source(m)] || used[c.target(m)]) return fail("matched morphisms share an object");
    used[c.source(m)] = used[c.target(m)] = true;
    in_matching[m] = true;
  }
  bool no_parallel = true;
  for (int m : matching)
    if (c.between(c.source(m), c.target(m)).size() != 1) no_parallel = false;
  r.cycle_free = !alternating_cycle(c, in_matching);
  r.linear_extension = no_parallel ? matched_extension(c, matching) : std::vector<int>{};
  r.extension_found = no_parallel && static_cast<int>(r.linear_extension.size()) == n;
  if (r.cycle_free != r.extension_found)
    throw VerificationError("acyclicity checks disagree");
  for (int x = 0; x < n; ++x)
    if (!used[x]) {
      r.critical.push_back(x);
      if (static_cast<int>(r.census.size()) <= c.rank(x)) r.census.resize(c.rank(x) + 1, 0);
      ++r.census[c.rank(x)];
    }
  if (!no_parallel) return fail("a matched morphism has a parallel morphism");
  if (!r.cycle_free) return fail("matching has an alternating cycle");
  r.valid = true;
  return r;
}

std::vector<int> patchwork(const AcyclicCategory& c, const std::vector<int>& phi,
                           const std::function<bool(int, int)>& target_leq,
                           const std::vector<std::vector<int>>& fiber_matchings) {
  for (int m = 0; m < c.morphism_count(); ++m)
    if (!target_leq(phi[c.source(m)], phi[c.target(m)]))
      throw VerificationError("patchwork map is not a functor");
  std::vector<int> out;
  for (const auto& fm : fiber_matchings)
    for (int m : fm) {
      if (phi[c.source(m)] != phi[c.target(m)])
        throw VerificationError("matched morphism crosses fibers");
      out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Removes pairs (g, f) where g is the only remaining object below f, and
// minimal objects as critical ones while the quota for their rank allows.
// Either move keeps the remaining set upward closed, so the removal order is
// a linear extension with matched pairs consecutive.
struct CollapseSearch {
  const AcyclicCategory& p;
  long budget;
  std::vector<int> quota;  // critical objects still allowed per rank
  std::vector<bool> alive;
  std::vector<int> below;  // remaining distinct objects below
  std::vector<std::vector<int>> below_objects, above_objects;
  std::vector<int> chosen;
  int remaining;

  CollapseSearch(const AcyclicCategory& cat, long b, std::vector<int> census)
      : p(cat), budget(b), quota(std::move(census)) {
    const int n = p.object_count();
    quota.resize(std::max<int>(quota.size(), p.max_rank() + 1), 0);
    alive.assign(n, true);
    below_objects.resize(n);
    above_objects.resize(n);
    for (int x = 0; x < n; ++x) {
      std::set<int> s, t;
      for (int m : p.incoming(x)) s.insert(p.source(m));
      for (int m : p.outgoing(x)) t.insert(p.target(m));
      below_objects[x].assign(s.begin(), s.end());
      above_objects[x].assign(t.begin(), t.end());
      below.push_back(static_cast<int>(s.size()));
    }
    remaining = n;
  }

  void remove(int x) {
    alive[x] = false;
    --remaining;
    for (int y : above_objects[x]) --below[y];
  }
  void restore(int x) {
    alive[x] = true;
    ++remaining;
    for (int y : above_objects[x]) ++below[y];
  }

  bool run() {
    if (remaining == 0) return std::all_of(quota.begin(), quota.end(), [](int q) { return q == 0; });
    if (--budget < 0) throw SearchExhausted("matching search budget exhausted");
    std::vector<std::pair<int, int>> moves;  // (f, morphism)
    for (int f = 0; f < p.object_count(); ++f) {
      if (!alive[f] || below[f] != 1) continue;
      int g = -1;
      for (int y : below_objects[f])
        if (alive[y]) g = y;
      auto ms = p.between(g, f);
      if (ms.size() != 1 || !p.indecomposable(ms[0])) continue;
      moves.push_back({f, ms[0]});
    }
    std::stable_sort(moves.begin(), moves.end(), [&](const auto& a, const auto& b) {
      return p.rank(a.first) > p.rank(b.first);
    });
    for (auto [f, m] : moves) {
      int g = p.source(m);
      remove(f);
      remove(g);
      chosen.push_back(m);
      if (run()) return true;
      chosen.pop_back();
      restore(g);
      restore(f);
    }
    std::vector<int> critical;
    for (int x = 0; x < p.object_count(); ++x)
      if (alive[x] && below[x] == 0 && quota[p.rank(x)] > 0) critical.push_back(x);
    std::stable_sort(critical.begin(), critical.end(),
                     [&](int a, int b) { return p.rank(a) < p.rank(b); });
    for (int x : critical) {
      remove(x);
      --quota[p.rank(x)];
      if (run()) return true;
      ++quota[p.rank(x)];
      restore(x);
    }
    return false;
  }
};

struct ExhaustiveSearch {
  const AcyclicCategory& p;
  int top;
  std::vector<int> order;
  std::vector<bool> used;
  std::vector<int> chosen;
  bool critical_used = false;

  bool run(size_t i) {
    while (i < order.size() && used[order[i]]) ++i;
    if (i == order.size()) {
      if (!critical_used) return false;
      return validate_matching(p, chosen).valid;
    }
    int x = order[i];
    used[x] = true;
    if (!critical_used && p.rank(x) == top) {
      critical_used = true;
      if (run(i + 1)) return true;
      critical_used = false;
    }
    std::vector<int> options;
    for (int m : p.outgoing(x)) options.push_back(m);
    for (int m : p.incoming(x)) options.push_back(m);
    for (int m : options) {
      int y = p.source(m) == x ? p.target(m) : p.source(m);
      if (used[y] || !p.indecomposable(m) || p.between(p.source(m), p.target(m)).size() != 1)
        continue;
      used[y] = true;
      chosen.push_back(m);
      if (run(i + 1)) return true;
      chosen.pop_back();
      used[y] = false;
    }
    used[x] = false;
    return false;
  }
};

}  // namespace

std::vector<int> one_critical_matching(const AcyclicCategory& p, const SearchOptions& opts) {
  if (p.object_count() == 0) throw NoMatching("empty poset has no critical object");
  std::vector<int> census(p.max_rank() + 1, 0);
  census.back() = 1;
  CollapseSearch collapse(p, opts.budget, census);
  bool exhausted = false;
  try {
    if (collapse.run()) {
      std::vector<int> m = collapse.chosen;
      std::sort(m.begin(), m.end());
      if (validate_matching(p, m).valid) return m;
    }
  } catch (const SearchExhausted&) {
    exhausted = true;
  }
  if (p.object_count() <= opts.exhaustive_limit) {
    ExhaustiveSearch ex{p, p.max_rank(), {}, std::vector<bool>(p.object_count(), false), {}};
    for (int x = 0; x < p.object_count(); ++x) ex.order.push_back(x);
    std::stable_sort(ex.order.begin(), ex.order.end(),
                     [&](int a, int b) { return p.rank(a) > p.rank(b); });
    if (ex.run(0)) {
      std::sort(ex.chosen.begin(), ex.chosen.end());
      return ex.chosen;
    }
    throw NoMatching("no acyclic matching with one top-rank critical object exists");
  }
  if (exhausted) throw SearchExhausted("one-critical matching search budget exhausted");
  throw SearchExhausted("no collapse sequence found and the poset is too large to enumerate");
}

std::vector<int> census_matching(const AcyclicCategory& c, const std::vector<int>& census,
                                 const SearchOptions& opts) {
  CollapseSearch search(c, opts.budget, census);
  if (!search.run()) throw NoMatching("no acyclic matching with the requested critical census exists");
  std::vector<int> m = search.chosen;
  std::sort(m.begin(), m.end());
  auto r = validate_matching(c, m);
  if (!r.valid) throw VerificationError("collapse matching: " + r.reason);
  return m;
}

TorusMatching torus_matching(const AcyclicCategory& f, const std::vector<std::vector<int>>& labels,
                             int k, const SearchOptions& opts) {
  const int n = f.object_count();
  std::vector<int> phi(n);
  std::map<int, std::vector<int>> fibers;
  for (int x = 0; x < n; ++x) {
    int mask = 0;
    for (int i : labels[x]) mask |= 1 << i;
    phi[x] = mask;
    fibers[mask].push_back(x);
  }
  std::vector<std::vector<int>> fiber_matchings;
  for (auto& [mask, objects] : fibers) {
    Subcategory sub = full_subcategory(f, objects);
    std::vector<int> local = one_critical_matching(sub.category, opts);
    std::vector<int> lifted;
    for (int m : local) lifted.push_back(sub.morphisms[m]);
    fiber_matchings.push_back(lifted);
  }
  // Target poset: subsets of [k] ordered by reverse inclusion.
  auto leq = [](int a, int b) { return (a & b) == b; };
  TorusMatching out;
  out.matching = patchwork(f, phi, leq, fiber_matchings);
  out.report = validate_matching(f, out.matching);
  if (!out.report.valid) throw VerificationError("torus matching: " + out.report.reason);
  std::vector<int> expected(k + 1);
  for (int r = 0; r <= k; ++r) {
    long b = 1;
    for (int i = 0; i < r; ++i) b = b * (k - i) / (i + 1);
    expected[r] = static_cast<int>(b);
  }
  std::vector<int> census = out.report.census;
  census.resize(k + 1, 0);
  if (census != expected) throw VerificationError("torus matching census is not binomial");
  return out;
}

}  // namespace toricmin::morse
