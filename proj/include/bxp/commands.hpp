// The bxp subcommands as library functions. Each writes its report to `out`,
// diagnostics to `err`, and returns the process exit status.

#ifndef BXP_COMMANDS_HPP_
#define BXP_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "bxp/greens.hpp"
#include "bxp/oracle.hpp"

namespace bxp::cli {

  enum ExitCode : int {
    exit_yes          = 0,
    exit_no           = 1,
    exit_input_error  = 2,
    exit_cap_exceeded = 3,
  };

  enum class Format { text, structured };

  //! Accepts L, R, H, D, J, leqL, leqR, leqJ.
  std::optional<Relation> parse_relation(std::string const& name);

  struct CheckOptions {
    std::string file;
    std::string f;
    std::string g;
    Relation    relation = Relation::EqL;
    Format      format   = Format::text;
  };

  struct WitnessOptions {
    std::string file;
    std::string f;
    bool        unit   = false;
    Format      format = Format::text;
  };

  struct SweepOptions {
    std::string   partition;
    std::uint64_t cap     = default_cap;
    unsigned      threads = 0;
    Format        format  = Format::text;
  };

  struct DumpOptions {
    std::string   partition;
    std::uint64_t cap = default_cap;
    std::string   output;
  };

  int cmd_check(CheckOptions const& opts, std::ostream& out, std::ostream& err);
  int cmd_witness(WitnessOptions const& opts,
                  std::ostream&         out,
                  std::ostream&         err);
  int cmd_survey(SweepOptions const& opts, std::ostream& out, std::ostream& err);
  int cmd_conjecture(SweepOptions const& opts,
                     std::ostream&       out,
                     std::ostream&       err);
  int cmd_dump(DumpOptions const& opts, std::ostream& out, std::ostream& err);

}  // namespace bxp::cli

#endif  // BXP_COMMANDS_HPP_
