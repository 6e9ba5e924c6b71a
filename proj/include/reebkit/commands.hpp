#pragma once

// Subcommands of the reebkit executable as pure functions from a run
// configuration to serialized output and an exit code.

#include "reebkit/io.hpp"

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

namespace reebkit::cli {

enum ExitCode { Success = 0, UsageError = 1, DegenerateInput = 2, VerificationFailure = 3 };

struct RunConfig {
    std::string command;
    /// Inline system JSON (file references already resolved).
    std::optional<io::json> system;
    std::optional<io::json> tree;
    std::optional<io::json> catalog;

    std::string out, svg, csv;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    int jobs = 1;

    double C = 5;
    int samples = 100;
    int quads = 20;

    std::string orbit = "K";
    int k = 3;
    int p = 0;
    std::optional<double> sigma;

    double r = 0.5, theta = 0;
    std::string direction = "forward";
    int iterations = 1;

    ContactSystem contact_system() const;
    /// Throws ConfigError on non-positive tolerances, bad counts or unknown names.
    void validate() const;
};

/// Reads a config file. "system", "tree" and "catalog" may be inline JSON
/// or paths relative to the config file.
RunConfig load_config(const std::filesystem::path& path);
RunConfig config_from_json(const io::json& j, const std::filesystem::path& base = ".");

struct CommandOutput {
    io::json body;
    int exit_code = Success;
    std::optional<std::string> svg;
    std::optional<std::string> csv;
};

CommandOutput cmd_index(const RunConfig& cfg);
CommandOutput cmd_verify(const RunConfig& cfg);
CommandOutput cmd_lens(const RunConfig& cfg);
CommandOutput cmd_tree_validate(const RunConfig& cfg);
CommandOutput cmd_sigma(const RunConfig& cfg);
CommandOutput cmd_return_map(const RunConfig& cfg);

/// Dispatches on cfg.command.
CommandOutput run_command(const RunConfig& cfg);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

/// Two-space indented JSON with a trailing newline.
std::string render(const io::json& j);

/// Writes the JSON body (to cfg.out or stdout) and the optional SVG/CSV
/// artifacts. Throws ConfigError when a path is not writable.
void write_outputs(const RunConfig& cfg, const CommandOutput& out, std::ostream& stdout_stream);

/// Scatter of (start, image) pairs in the zeta chart of the page.
std::string return_scatter_svg(const Main3Report& rep);

} // namespace reebkit::cli
