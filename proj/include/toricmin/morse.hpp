#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricmin/category.hpp"

namespace toricmin::morse {

// The search ran out of budget: an implementation limit, not a proof.
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An exhaustive search finished without finding a matching.
struct NoMatching : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatchingReport {
  bool valid = false;
  std::string reason;
  bool cycle_free = false;          // alternating-cycle search
  bool extension_found = false;     // linear extension with consecutive pairs
  std::vector<int> critical;        // objects
  std::vector<int> census;          // critical objects per rank
  std::vector<int> linear_extension;
};

// A matching is a set of indecomposable morphisms with pairwise distinct
// endpoints. Acyclicity is decided twice: by searching the alternating
// digraph for a cycle, and by building a linear extension in which each
// matched pair is consecutive (which also needs no parallel morphisms).
MatchingReport validate_matching(const AcyclicCategory& c, const std::vector<int>& matching);

// Union of fiber matchings along phi into a poset; checks that phi is a
// functor and that every matched morphism lies in a single fiber.
std::vector<int> patchwork(const AcyclicCategory& c, const std::vector<int>& phi,
                           const std::function<bool(int, int)>& target_leq,
                           const std::vector<std::vector<int>>& fiber_matchings);

struct SearchOptions {
  long budget = 2'000'000;  // search nodes
  int exhaustive_limit = 20;
};

// Acyclic matching with exactly one critical object, of top rank.
std::vector<int> one_critical_matching(const AcyclicCategory& p, const SearchOptions& opts = {});

// Acyclic matching with census[r] critical objects of rank r. The search
// walks removal orders (a collapse pair or a minimal critical object at each
// step), which reach every acyclic matching, so NoMatching is a proof.
std::vector<int> census_matching(const AcyclicCategory& c, const std::vector<int>& census,
                                 const SearchOptions& opts = {});

// Acyclic matching of a torus face category with binomial(k, r) critical
// objects in rank r. labels[x] lists the hypersurfaces (out of k, through a
// common vertex, independent) that contain object x.
struct TorusMatching {
  std::vector<int> matching;
  MatchingReport report;
};

TorusMatching torus_matching(const AcyclicCategory& f, const std::vector<std::vector<int>>& labels,
                             int k, const SearchOptions& opts = {});

}  // namespace toricmin::morse
