#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posetq/code.hpp"
#include "posetq/stabilizer.hpp"

namespace posetq::cli {

struct RunSpec {
    std::string command;
    std::string input;
    std::optional<std::string> poset;  // overrides the input's "poset" entry
    std::uint64_t cap = code::kDefaultCap;
    std::uint64_t seed = 0;
    std::uint64_t search_limit = stabilizer::kDefaultSearchLimit;
    bool json = false;
};

const std::vector<std::string>& commands();

/// Runs one command. Exit codes: 0 computed or holds, 1 a checked property failed, 2 input error.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace posetq::cli
