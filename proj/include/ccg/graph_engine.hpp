#pragma once

// Exact connectivity/diameter computation for the commuting graphs
// Gamma(F_p, n) at desk scale. Vertices sharing a commutant subspace have
// identical neighborhoods, so the graph is compressed to its quotient by
// commutant classes (each class is a clique) and all distances are computed
// by BFS over classes. Budgets are enforced by refusal, never by sampling.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccg/commutant.hpp"
#include "ccg/matrix.hpp"

namespace ccg {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphBudget {
  std::uint64_t max_matrix_space = 1u << 20;  // refuse when p^(n^2) exceeds this
  int threads = 1;
};

inline constexpr int kInfiniteDistance = -1;

struct ComponentSummary {
  std::uint64_t classes = 0;
  std::uint64_t vertices = 0;
  bool clique = false;
  int diameter = 0;
};

struct CommutingGraphSummary {
  std::uint64_t p = 0;
  int n = 0;
  std::uint64_t vertex_count = 0;  // p^(n^2) - p nonscalar matrices
  std::uint64_t class_count = 0;
  std::uint64_t component_count = 0;
  bool connected = false;
  bool all_components_cliques = false;
  int diameter = kInfiniteDistance;  // infinite iff more than one component
  std::vector<ComponentSummary> components;
  double wall_time_seconds = 0.0;
};

class FiniteCommutingGraph {
 public:
  FiniteCommutingGraph(std::uint64_t p, int n, const GraphBudget& budget = {});
  ~FiniteCommutingGraph();
  FiniteCommutingGraph(FiniteCommutingGraph&&) noexcept;
  FiniteCommutingGraph& operator=(FiniteCommutingGraph&&) noexcept;

  std::uint64_t p() const;
  int n() const;
  std::uint64_t vertex_count() const;
  std::uint32_t class_count() const;

  std::uint32_t class_of(const Matrix<PrimeField>& a) const;  // throws on scalar input
  std::uint64_t class_size(std::uint32_t cls) const;
  Matrix<PrimeField> class_representative(std::uint32_t cls) const;

  // BFS distances over classes; kInfiniteDistance for other components.
  std::vector<int> distances_from_class(std::uint32_t cls) const;
  int distance(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b) const;

  const CommutingGraphSummary& summary() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CommutingGraphSummary ff_graph_summary(std::uint64_t p, int n, const GraphBudget& budget = {});

int ff_distance(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b, const GraphBudget& budget = {});

// Linear-algebra distance oracle, usable over any exact field: d(A,B) <= 2
// iff A and B have a common nonscalar neighbor iff their joint commutant
// has dimension at least 2 (it always contains the scalars).
template <class F>
bool distance_at_most_2(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.is_scalar() || b.is_scalar()) throw std::domain_error("distance_at_most_2: scalar input");
  return joint_commutant_basis(a, b).dimension() >= 2;
}

}  // namespace ccg
