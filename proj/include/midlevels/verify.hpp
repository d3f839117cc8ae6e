#ifndef MIDLEVELS_VERIFY_HPP
#define MIDLEVELS_VERIFY_HPP

#include <string>
#include <vector>

namespace midlevels {

struct CheckResult {
    std::string module;
    std::string name;
    bool pass = false;
    std::string witness; // first violation, or a short summary when passing
};

// Full invariant suite, exhaustive up to depth k (per-check caps applied
// where a check is only meaningful from some k on).
std::vector<CheckResult> verify_all(int k, int jobs = 0);

// Re-derives the reference tables and diffs them against the golden files.
std::vector<CheckResult> verify_tables(const std::string& golden_dir);

// Agreement report of the direct neighbor procedure against the graph-free
// delta route: exact/fallback counts per color, mismatches listed.
std::string direct_neighbor_report(int k);

} // namespace midlevels

#endif
