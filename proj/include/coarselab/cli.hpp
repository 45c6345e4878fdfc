#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace coarselab {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvariant = 2 };

/// Runs one command line (without the program name). Reports go to `out`
/// unless --report names a file; errors go to `err` as
/// {"error": {"kind": ..., "message": ...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a key=value config file. Blank lines and '#' comments are ignored.
std::map<std::string, std::string> parse_config(const std::string& text);

/// Appends "--key value" for every config key whose flag is absent from
/// `args`, so explicit flags take precedence.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::map<std::string, std::string>& config);

}  // namespace coarselab
