#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minpoly/polygon.hpp"
#include "minpoly/sequences.hpp"

namespace minpoly::oracle {

enum class Objective { Area, Perimeter, BBox };

int64_t objective_value(const Measures& m, Objective obj);

struct OracleConfig {
    int64_t max_edge_len = 4;  // Lmax
    Objective objective = Objective::Area;
    bool escalate = true;
    int size_guard = 16;  // refuse sequences longer than this
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(int n, int guard)
        : std::runtime_error("sequence of length " + std::to_string(n) +
                             " exceeds the oracle guard of " + std::to_string(guard)) {}
};

struct NoRealizationWithinBound : std::runtime_error {
    NoRealizationWithinBound()
        : std::runtime_error("no realization with the given edge-length bound") {}
};

// Every simple polygon realizing s with all edge lengths in [1, Lmax], first
// vertex pinned at the origin and heading East. Deterministic DFS order.
// Returning false from the callback stops the enumeration.
void enumerate_realizations(const TurnSequence& s, const OracleConfig& cfg,
                            const std::function<bool(const GridPolygon&)>& sink);

std::vector<GridPolygon> all_realizations(const TurnSequence& s,
                                          const OracleConfig& cfg);

struct OracleResult {
    int64_t value = 0;
    GridPolygon witness;
    int64_t lmax_used = 0;
};

// Minimum objective over all realizations; with cfg.escalate the bound grows
// until the optimum is stable across one escalation and its witness stays
// clear of the bound.
OracleResult oracle_min(const TurnSequence& s, OracleConfig cfg);

// All words over {L,R} of length n with #L - #R = 4.
std::vector<TurnSequence> all_sequences(int n, bool dedupe_rotations = false,
                                        int size_guard = 16);

struct DeltaResult {
    int64_t delta = 0;  // min over sequences of min area
    int64_t Delta = 0;  // max over sequences of min area
};

DeltaResult delta_Delta(int n, int size_guard = 16);

}  // namespace minpoly::oracle
