#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace igraphs::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;       // verification failure or disagreement
inline constexpr int exit_usage = 2;         // usage, parse, or validation error
inline constexpr int exit_inconclusive = 3;  // search budget exhausted

struct VerifyOptions {
    std::size_t paths_max = 21;
    std::size_t cycles_max = 22;
    bool force = false;          // lift the n <= 22 sweep guard
    std::string json_path;       // "" = none, "-" = stdout, else file path
};

struct ExportOptions {
    std::string format = "dot";  // dot | json
    std::string labels = "auto"; // auto | isets | pairs | indices
};

int cmd_build(const std::string& target, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_hamilton(const std::string& target, std::uint64_t budget, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& target, const ExportOptions& options, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace igraphs::cli
