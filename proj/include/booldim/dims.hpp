#pragma once

// Boolean, inner, geometric and symplectic dimensions of finite graphs over F2,
// plus the mod-2 independence number.
//
// symplectic = rank A(G); geometric = min_D rank(A(G) + D) over 0/1 diagonals.
// The Boolean (= inner) dimension is the same sweep with a different cost: a
// Gram matrix with a nonzero diagonal entry and rank r is realizable with the
// standard scalar product in F2^r, while an alternating Gram matrix of rank
// 2m > 0 needs F2^(2m+1) (its vectors all have even weight). Since A(G) has a
// zero diagonal, the alternating case is exactly D = 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "booldim/f2matrix.hpp"
#include "booldim/graph.hpp"
#include "booldim/search.hpp"

namespace booldim {

/// Default cap on the number of non-isolated vertices for 2^n sweeps.
inline constexpr std::size_t kDefaultSweepCap = 26;
/// Cap on the vertex count for the exact mod-2 independence search.
inline constexpr std::size_t kMaxIndOrder = 16;

struct SweepOptions {
  SearchLimits limits;
  std::size_t max_order = kDefaultSweepCap;
};

enum class Trichotomy {
  AllEqual,              // geometric = symplectic = boolean
  GeoSympEqBoolMinus1,   // geometric = symplectic = boolean - 1
  GeoEqBoolLtSymp,       // geometric = boolean < symplectic
};

std::string_view to_string(Trichotomy t);

/// The case matching the three numbers, or nullopt if none does.
std::optional<Trichotomy> classify(std::size_t geometric, std::size_t symplectic, std::size_t boolean);

struct GeometricResult {
  std::size_t value = 0;
  DiagonalMask witness;  // least mask in sweep order attaining `value`
};

struct BooleanResult {
  std::size_t value = 0;
  CliqueFamily witness;  // exactly `value` cliques whose Boolean sum is G
};

struct DimensionReport {
  std::size_t symplectic = 0;
  std::size_t geometric = 0;
  std::size_t boolean = 0;
  std::size_t inner = 0;
  Trichotomy trichotomy_case = Trichotomy::AllEqual;
  std::optional<DiagonalMask> witness_diagonal;
  std::optional<CliqueFamily> witness_cliques;
};

struct IndWitness {
  VertexSet set = 0;
  std::size_t size = 0;
};

std::size_t symplectic_dim(const Graph& g);

GeometricResult geometric_dim(const Graph& g, const SweepOptions& options = {});

BooleanResult boolean_dim(const Graph& g, const SweepOptions& options = {});

/// Boolean dimension without a witness, single-threaded. This is the inner
/// loop of the inversion-index search.
std::size_t boolean_dim_value(const Graph& g, std::size_t max_order = kDefaultSweepCap);
/// Same, for adjacency rows already known to be symmetric and loopless.
std::size_t boolean_dim_value(std::span<const Word> rows, std::size_t max_order = kDefaultSweepCap);

/// Least k <= k_max such that G is a Boolean sum of k cliques, by direct
/// search over families of distinct vertex subsets of size >= 2. Requires
/// n <= 6 and k_max <= 5.
std::optional<std::size_t> boolean_dim_oracle(const Graph& g, std::size_t k_max);

DimensionReport dimension_report(const Graph& g, const SweepOptions& options = {});

/// Vectors f(v) in F2^width with <f(u), f(v)> = gram[u][v] for all u != v;
/// for a non-alternating gram the diagonal is matched as well. `width` is
/// rank(gram), or rank(gram) + 1 when gram is alternating and nonzero.
struct InnerFactorization {
  std::vector<Word> vectors;
  std::size_t width = 0;
};
InnerFactorization inner_factorization(const F2Matrix& gram);

/// Every nonempty X within A has a vertex v outside X with |N(v) & X| odd.
/// Requires |A| <= 20.
bool is_independent_mod2(const Graph& g, VertexSet a);

struct IndResult {
  std::size_t value = 0;
  IndWitness witness;
};

/// Maximum mod-2 independent set by branch and bound. Requires n <= 16.
IndResult ind_mod2(const Graph& g, const SearchLimits& limits = {});

}  // namespace booldim
