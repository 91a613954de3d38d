#pragma once

#include <iosfwd>
#include <string>

namespace brane {

struct CommandOptions {
    std::string command;
    std::string model_path;
    int k = 2;
    int max_degree = 8;
    bool homology = false;
    bool tsv = false;
    std::string suite;
};

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageOrModelError = 2 };

int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace brane
