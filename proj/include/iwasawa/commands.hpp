#pragma once

/**
 * @file commands.hpp
 * @brief Subcommands of the iwlambda tool, callable in-process.
 *
 * Each command writes records to `out`, diagnostics to `err`, and returns the
 * process exit code:
 *
 *   0  success, or every compared criterion agreed
 *   1  a mathematical disagreement was found
 *   2  bad arguments or a violated precondition
 */

#include <cstdint>
#include <optional>
#include <ostream>

#include "iwasawa/catalog.hpp"
#include "iwasawa/output.hpp"

namespace iwasawa {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

int cmd_table(const Catalog& catalog, std::uint64_t d, std::uint64_t p_max, Format format,
              std::ostream& out, std::ostream& err);

int cmd_theorem1(const Catalog& catalog, std::uint64_t d, std::uint64_t p_max, Format format,
                 std::ostream& out, std::ostream& err);

/// Exactly one of p, p_max must be set.
int cmd_gold(std::uint64_t d, std::optional<std::uint64_t> p, std::optional<std::uint64_t> p_max,
             Format format, std::ostream& out, std::ostream& err);

int cmd_scan_ordinary(std::uint64_t p, Format format, std::ostream& out, std::ostream& err);

int cmd_sequences(std::uint64_t p, std::uint64_t m, Format format, std::ostream& out, std::ostream& err);

}  // namespace iwasawa
