#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "g2/report.hpp"

namespace g2 {

enum class ObstructionStage { P, pairing, all };

Report identities_report();
Report nearly_g2_report();
/// Throws FormParseError on a malformed literal.
Report decompose_report(int degree, const std::string& literal);
Report obstruction_report(ObstructionStage stage);

/// Command-line entry point. args[0] is the program name. Returns 0 on pass
/// or value, 1 on a failed check, 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2
