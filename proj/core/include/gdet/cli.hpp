#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gdet/det_factor.hpp"

namespace gdet {

enum class Verb { factor, extend, generalize, invert, verify };

struct Command {
    Verb verb = Verb::factor;
    std::string group;
    std::optional<std::string> subgroup;  // generator list; absent means H = G
    std::string assignment;               // invert only
    std::string format = "text";          // "text" | "json"
    int oracle_bound = kDefaultOracleBound;
    bool numeric = false;  // add decimal renderings (non-canonical)
    bool timing = false;   // include elapsed time in the document
    std::uint64_t seed = 1;
};

/// Runs a parsed command, writing the result document to out and
/// diagnostics to err. Returns the exit status: 0 success (verified or
/// explicitly unverified-by-oracle), 1 verification failure or singular
/// element, 2 usage errors.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// argv front end over execute(); same exit conventions.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gdet
