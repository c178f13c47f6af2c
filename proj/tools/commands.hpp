#pragma once

#include <iosfwd>
#include <string>

#include "sftgw/hurwitz.hpp"
#include "sftgw/truncation.hpp"

namespace sftgw::cli {

enum class Format { kText, kJson };

struct RunConfig {
  TruncationContext ctx;
  Format format = Format::kText;
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

CommandResult cmd_hamiltonian(int n, const RunConfig& cfg);
CommandResult cmd_commute(int m, int n, const RunConfig& cfg);
CommandResult cmd_hurwitz(const HurwitzKey& key, const RunConfig& cfg);
CommandResult cmd_elliptic(const RunConfig& cfg);
CommandResult cmd_p1(int d, const RunConfig& cfg);
CommandResult cmd_curve(int g, const RunConfig& cfg);

// Parses argv, dispatches, writes to out/err and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sftgw::cli
