#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dyadic/graph.hpp"
#include "dyadic/rational.hpp"

namespace dyadic {

enum class Family { erdos_renyi, barabasi_albert, regular };

struct MeanDegree {
    Rational value;
};
struct Density {
    Rational value;
};
// Exact edge count; resolves to mean degree 2M/N.
struct EdgeCount {
    std::int64_t value;
};

using GeneratorTarget = std::variant<MeanDegree, Density, EdgeCount>;

struct GeneratorSpec {
    Family family = Family::erdos_renyi;
    std::int64_t node_count = 0;
    GeneratorTarget target = MeanDegree{Rational(6)};
    std::uint64_t seed = 1;
    bool require_connected = false;
    // Regeneration attempts when require_connected is set.
    int max_attempts = 10000;
};

Family parse_family(std::string_view name);  // er | ba | regular (long names accepted)
std::string_view family_name(Family f);

// Resolved M for the Erdős–Rényi family: round(N<d>/2) or round(delta N(N-1)/2).
std::int64_t resolved_edge_count(const GeneratorSpec& spec);
// Resolved degree of the regular family, parity-adjusted so N*d is even.
std::int64_t resolved_regular_degree(const GeneratorSpec& spec);
// Edges added per arriving node in the preferential-attachment family: round(<d>/2).
std::int64_t resolved_attachment_count(const GeneratorSpec& spec);

// Throws Error(config) for unsatisfiable specs and Error(generation) when the
// retry budget is exhausted. Deterministic for a fixed spec.
Graph generate(const GeneratorSpec& spec);

// key=value lines: family, n, mean_degree | density | edges, seed, connected.
GeneratorSpec parse_generator_config(std::string_view text);

} // namespace dyadic
