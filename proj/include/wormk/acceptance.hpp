#pragma once

#include <string>
#include <vector>

namespace wormk::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the numbered verification criteria (all of them when only_id == 0).
/// Each criterion is self-contained, deterministic, and pinned to its
/// tolerance in code.
std::vector<CriterionResult> run(int only_id = 0);

}  // namespace wormk::accept
