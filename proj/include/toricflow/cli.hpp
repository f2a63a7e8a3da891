#pragma once

#include "toricflow/error.hpp"
#include "toricflow/report.hpp"
#include "toricflow/scene.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace toricflow {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitResource = 4;

/// 2 for malformed input, 3 for a failed hypothesis, 4 for a resource bound.
int exit_code(ErrorKind kind);

/// Everything the toolkit can say about a scene: the `report` subcommand.
Report build_report(const Scene& scene, long box = 5);

/// Entry point behind the executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricflow
