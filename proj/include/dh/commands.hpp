#pragma once

#include "dh/document.hpp"
#include "dh/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dh {

struct RunOptions {
    std::size_t max_dim = 3;
    std::optional<std::size_t> dim;  // hocolim truncation; defaults to max_dim + 1
    std::size_t max_cosets = 50000;
    std::uint64_t seed = 20240501;
};

struct Report {
    std::string command;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<std::string> warnings;
    int status = 0;
    std::vector<std::string> text;

    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& command_names();

/// Runs one command. Input and computation errors propagate as Error.
Report run(const std::string& command, const InputDocument& doc, const RunOptions& opts = {});

/// Process exit status for an error of the given kind.
int exit_status(ErrorKind kind);

}  // namespace dh
