#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "genergy/graph.hpp"

namespace genergy {

inline constexpr const char* kGeneratorVersion = "genergy-enum 1.0";

/// All connected graphs with n vertices and e edges, one per isomorphism
/// class, as sorted canonical graph6 strings.
struct GraphClassCensus {
    int n = 0;
    int e = 0;
    std::vector<std::string> graphs;
    std::string generated_at;  // UTC, ISO 8601
    std::string generator;     // kGeneratorVersion plus strategy name

    std::vector<Graph> decode() const;
};

enum class Strategy {
    /// Orderly generation by canonical construction path: each parent adds
    /// one edge per orbit of non-edges, and a child is kept only if the new
    /// edge is equivalent to its canonically chosen deletable edge.
    CanonicalAugmentation,
    /// Every one-edge extension of every parent, deduplicated by an invariant
    /// hash followed by explicit backtracking isomorphism tests.
    GenerateAndFilter,
};

std::string to_string(Strategy s);

struct EnumerationOptions {
    Strategy strategy = Strategy::CanonicalAugmentation;
    int threads = 0;  // 0 = hardware default; output does not depend on it
};

/// Desk-scale envelope: 1 <= n <= 10 and e <= n + 3.
bool within_envelope(int n, int e) noexcept;

/// Throws UnsupportedScaleError outside the envelope.
GraphClassCensus enumerate_connected(int n, int e, const EnumerationOptions& options = {});

/// Unlabeled trees on n vertices (the e = n-1 level), canonical graph6.
std::vector<std::string> enumerate_trees(int n, const EnumerationOptions& options = {});

// Cache layout: "<dir>/connected_n<n>_e<e>.g6" holds one graph6 per line;
// "<same>.meta" holds key=value lines n, e, count, digest, generated_at,
// generator.

std::filesystem::path census_cache_path(const std::filesystem::path& dir, int n, int e);

/// Throws std::runtime_error if the files cannot be written.
void census_cache_store(const GraphClassCensus& census, const std::filesystem::path& path);

/// std::nullopt on a cache miss (either file absent). Throws
/// CorruptCacheError on any count, digest or header mismatch.
std::optional<GraphClassCensus> census_cache_load(int n, int e, const std::filesystem::path& path);

/// Loads from cache_dir when present, otherwise enumerates and stores.
GraphClassCensus enumerate_cached(int n, int e, const std::optional<std::filesystem::path>& cache_dir,
                                  const EnumerationOptions& options = {});

/// Hex FNV-1a 64 digest of the newline-joined census body.
std::string census_digest(const std::vector<std::string>& graphs);

}  // namespace genergy
