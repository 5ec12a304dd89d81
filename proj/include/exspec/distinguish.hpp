#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exspec/graph.hpp"
#include "exspec/level_matrix.hpp"
#include "exspec/spectral.hpp"

namespace exspec {

enum class Conclusion { proved_non_isomorphic, indistinguishable };

struct LevelCheck {
    int level;
    LevelFlavor flavor;
    std::optional<SpectrumVerdict> verdict;  // empty when the level was skipped
    std::string note;                        // guard message for skipped levels
};

// Screens are the cheap pre-spectral checks: vertex count, edge count,
// degree sequence. A screen hit is reported as distinguishing level 0.
struct DistinguishReport {
    std::vector<LevelCheck> levels_checked;
    std::optional<int> first_distinguishing_level;
    Conclusion conclusion;
    int levels_completed = 0;     // highest level actually compared
    std::string screen_reason;    // "vertex_count" | "edge_count" | "degree_sequence" | ""
};

struct DistinguishOptions {
    int max_level = 0;            // 0 means the default ceiling floor(N/2)
    LevelFlavor flavor = LevelFlavor::adjacency;
    std::optional<double> tol;    // empty: 1e-8 * max(1, max row sum), per level
    bool skip_screens = false;
    bool all_levels = false;      // keep checking past the first Different level
    bool force = false;           // allow max_level beyond floor(N/2)
};

// Escalates through level spectra until the pair is distinguished or
// max_level is exhausted. The vertex counts must match regardless of
// skip_screens; a mismatch is an immediate non-isomorphism verdict.
DistinguishReport distinguish(const Graph& g1, const Graph& g2, const DistinguishOptions& opt);

// --- batch bucketing ---

struct BatchEntry {
    std::string name;
    Graph graph;
};

struct BatchStage {
    std::string invariant;           // "degree_sequence" or "level_k_spectrum"
    int n_buckets = 0;
    std::vector<int> bucket_sizes;
    bool skipped = false;
    std::string note;
};

struct BatchReport {
    int n_entries = 0;
    std::vector<BatchStage> stages;
    std::vector<std::vector<std::string>> final_buckets;          // member names
    std::vector<std::pair<std::string, std::string>> pairs_remaining;
};

struct BatchOptions {
    int max_level = 0;  // 0 means floor(N/2)
    LevelFlavor flavor = LevelFlavor::adjacency;
    std::optional<double> tol;
    bool force = false;
};

// Partitions a catalog by successive invariants: degree sequence, then level
// 1..max spectra. Requires >= 2 entries with a uniform vertex count.
BatchReport run_batch(const std::vector<BatchEntry>& entries, const BatchOptions& opt);

}  // namespace exspec
