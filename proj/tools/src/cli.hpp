#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "query.hpp"

namespace intertwine::cli {

/// Exit codes: 0 decided, 1 selfcheck found a counterexample, 2 bad input or
/// unmet precondition, 3 enumeration bound exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

inline constexpr const char* kCacheDirEnv = "INTERTWINE_CACHE_DIR";

/// Parses and executes; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cache_dir = std::nullopt);

/// Executes an already parsed query.
int execute(const Query& q, const RunOptions& options, std::ostream& out, std::ostream& err);

}  // namespace intertwine::cli
