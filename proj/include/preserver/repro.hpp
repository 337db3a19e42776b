#ifndef PRESERVER_REPRO_HPP
#define PRESERVER_REPRO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace preserver {

/// One regression case over the built-in corpus; `lines` holds the per-check
/// diffs/details in a fixed order.
struct ReproResult {
    std::string id;
    bool pass = false;
    std::vector<std::string> lines;
};

const std::vector<std::string>& repro_case_ids();

/// Runs one case; throws std::invalid_argument for an unknown id.
ReproResult run_repro_case(const std::string& id, uint64_t seed);

std::vector<ReproResult> run_all_repro_cases(uint64_t seed);

}  // namespace preserver

#endif
