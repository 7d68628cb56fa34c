#pragma once

#include <cstdint>
#include <optional>

#include "p3c/graph.hpp"

namespace p3c {

inline constexpr Vertex kDefaultOracleBound = 20;
inline constexpr Vertex kOracleHardLimit = 64;  // bitmask width

struct OracleOptions {
  Vertex bound = kDefaultOracleBound;  // raise to override, up to kOracleHardLimit
  std::optional<std::size_t> limit;    // stop once a set of this size is found
};

struct OracleResult {
  std::int64_t value = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
};

OracleResult beta_c_oracle(const Graph& g, const OracleOptions& options = {});
OracleResult caratheodory_oracle(const Graph& g, const OracleOptions& options = {});

VertexSet sigma_boundary(const Graph& g, const VertexSet& s);
bool is_irredundant(const Graph& g, const VertexSet& s);

}  // namespace p3c
