#pragma once

#include "filtadm/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace filtadm {

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int property_fails = 1;
inline constexpr int input_error = 2;
inline constexpr int disagreement = 3;
}  // namespace exit_code

struct CommandOptions {
    std::string command;
    // Either a path or inline JSON text; the text wins when both are set.
    std::string spec_path;
    std::string spec_text;
    std::string weights_path;
    std::string weights_text;
    std::uint64_t seed = 0;
    bool no_modify = false;
    std::size_t trials = 10000;
    std::optional<std::size_t> cap;
};

struct CommandResult {
    int exit = exit_code::pass;
    Json report;
};

CommandResult run_command(const CommandOptions& opts);

// Report serialization used by the CLI; the timing field is the only
// run-dependent part.
std::string render_report(const Json& report);
Json without_timing(Json report);

}  // namespace filtadm
