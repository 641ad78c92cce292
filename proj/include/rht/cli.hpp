#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rht::cli {

// Runs one command line (arguments without the program name), writing the
// report to `out` and diagnostics to `err`.
//
// Verbs: model, cohomology, massey, minimal-model, malcev, koszul, lcs,
// certify. The target is a preset id ("mr:k", "curve:g", "b1one", "kt",
// "filiform"; "lie-main:k" for lcs) or a path to a JSON presentation file.
//
// Returns the process exit code: 0 on success, 1 when a computation is
// refused under --strict (undefined product, inapplicable certificate),
// 2 on malformed input (bad flags, unknown presets, schema violations,
// invalid differentials).
//
// Reports are deterministic: identical invocations produce byte-identical
// output. JSON is canonical (sorted keys, rationals rendered "p/q"); the
// text format is a line-oriented projection of the same JSON.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rht::cli
