#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "genergy/spectral.hpp"

namespace genergy {

/// Energies closer than this with distinct polynomials are near-ties that
/// need manual review; equal polynomials are exact (cospectral) ties.
inline constexpr double kTieTolerance = 1e-8;

struct VerifyOptions {
    int threads = 0;
    std::optional<std::filesystem::path> cache_dir;
    std::uint64_t seed = 20120601;  // edge-cut sampling
    int trials = 500;
};

struct RankEntry {
    std::string graph6;  // canonical
    double energy = 0.0;
    CharPoly poly;
    std::uint64_t poly_digest = 0;
    int rank = 0;  // 1-based; cospectral graphs share a rank
};

struct NearTie {
    std::string first;
    std::string second;
    double delta = 0.0;
};

struct RankReport {
    int n = 0;
    int e = 0;
    std::vector<RankEntry> entries;  // non-decreasing energy
    std::vector<NearTie> near_ties;

    /// Canonical graph6 strings holding the given rank (1 = minimal).
    std::vector<std::string> rank_members(int rank) const;
};

/// Enumerates the class, computes eigensolver energies (one per distinct
/// polynomial), sorts by energy and assigns tie-group ranks.
RankReport build_rank_report(int n, int e, const std::vector<std::string>& census, int threads = 0);

/// Throws UnsupportedScaleError outside the enumeration envelope.
RankReport rank_class(int n, int e, const VerifyOptions& options = {});

struct Evidence {
    std::string item;
    bool ok = true;
    std::string detail;
    nlohmann::json data;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string scope;  // what range the check covers
    std::vector<Evidence> evidence;
    double runtime_seconds = 0.0;

    void add(Evidence ev);
    std::vector<Evidence> failures() const;
};

/// Census counts against the quoted values, plus strategy cross-validation.
CheckResult check_census(const VerifyOptions& options = {});

/// Minimal and second-minimal graphs among connected unicyclic graphs, 3 <= n <= 9.
CheckResult check_theorem_unicyclic(const VerifyOptions& options = {});
/// e = n+1, 4 <= n <= 9, with second/third-minimal claims.
CheckResult check_theorem_bicyclic(const VerifyOptions& options = {});
/// e = n+2, 4 <= n <= 9, with the second-minimal claim at n = 6.
CheckResult check_theorem_tricyclic(const VerifyOptions& options = {});
/// e = n+3, 5 <= n <= 9, with second-minimal claims at n = 6, 7.
CheckResult check_theorem_tetracyclic(const VerifyOptions& options = {});

/// Inequalities between named family energies for n_min <= n <= n_max.
CheckResult check_family_inequalities(int n_min = 6, int n_max = 40);

/// Exact closed-form polynomials and the corrected b_4(S(n,n+3)) = 4n - 24.
CheckResult check_closed_forms(int n_min = 6, int n_max = 12);

/// Energy never increases when an edge cut is deleted, over seeded random
/// connected graphs with n <= 10.
CheckResult check_edge_cut_lemma(int trials = 500, std::uint64_t seed = 20120601);

/// Names accepted by run_check, in report order.
const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name, const VerifyOptions& options = {});

/// Runs the named checks concurrently; results ordered as check_names().
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const VerifyOptions& options = {});

}  // namespace genergy
