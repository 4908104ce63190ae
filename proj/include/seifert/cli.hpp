#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace seifert::cli {

enum ExitCode : int { Ok = 0, ParseFailure = 2, DomainFailure = 3 };

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`; diagnostics and error names go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert::cli
