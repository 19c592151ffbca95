#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/io.hpp"
#include "permgrid/tables.hpp"

namespace permgrid {

struct RunConfig {
  EnumerationCaps caps;
  std::string format;  // json | csv | ascii | svg; empty picks each command's default
  int workers = 1;
  int gf_margin = 0;
  int verbosity = 1;  // 0 quiet, 1 summary, 2 detail
  SvgStyle svg;

  // Throws PreconditionError unless caps are positive and workers >= 1.
  void validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

// Reads the process environment.
std::optional<std::string> process_env(const char* name);

// "key = value" lines; '#' starts a comment. Keys: workers, cap_all,
// cap_involutions, cap_ffi, gf_margin, format, verbosity, svg_fill,
// svg_horizontal, svg_vertical, svg_intersection. Throws ParseError on an
// unknown key or a malformed value.
void apply_config_text(RunConfig& config, std::string_view text);
// PERMGRID_WORKERS, PERMGRID_CAP_ALL, PERMGRID_CAP_INVOLUTIONS,
// PERMGRID_CAP_FFI, PERMGRID_GF_MARGIN, PERMGRID_FORMAT.
void apply_environment(RunConfig& config, const EnvLookup& env);

// Runs one command line (args[0] is the program name). Exit codes: 0 success,
// 1 verification failure, 2 invalid input.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                 const EnvLookup& env = process_env);
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                 const EnvLookup& env = process_env);

}  // namespace permgrid
