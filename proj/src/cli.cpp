#include "permgrid/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permgrid/error.hpp"
#include "permgrid/verify.hpp"

namespace permgrid {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(std::string(what) + ": '" + t + "' is not an integer");
  }
  return v;
}

void set_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "workers") c.workers = parse_int(value, key);
  else if (key == "cap_all") c.caps.all = parse_int(value, key);
  else if (key == "cap_involutions") c.caps.involutions = parse_int(value, key);
  else if (key == "cap_ffi") c.caps.ffi = parse_int(value, key);
  else if (key == "gf_margin") c.gf_margin = parse_int(value, key);
  else if (key == "verbosity") c.verbosity = parse_int(value, key);
  else if (key == "format") c.format = value;
  else if (key == "svg_fill") c.svg.fill = value;
  else if (key == "svg_horizontal") c.svg.horizontal = value;
  else if (key == "svg_vertical") c.svg.vertical = value;
  else if (key == "svg_intersection") c.svg.intersection = value;
  else throw ParseError("unknown config key '" + key + "'");
}

// Rough object counts, for the warning printed when a raised cap is used.
double enumeration_size(PermKind kind, int n) {
  double v = 1;
  switch (kind) {
    case PermKind::all:
      for (int k = 2; k <= n; ++k) v *= k;
      return v;
    case PermKind::involutions: {
      double a = 1, b = 1;  // telephone numbers
      for (int k = 2; k <= n; ++k) {
        const double next = b + (k - 1) * a;
        a = b;
        b = next;
      }
      return b;
    }
    case PermKind::ffi:
      for (int k = n - 1; k > 1; k -= 2) v *= k;
      return v;
  }
  return v;
}

// Only fires when a raised cap lets the run go ahead.
void warn_cost(PermKind kind, int n, const EnumerationCaps& caps, std::ostream& err) {
  const EnumerationCaps defaults;
  if (n <= defaults.cap_for(kind) || n > caps.cap_for(kind)) return;
  err << "warning: size " << n << " is above the default " << to_string(kind) << " cap of "
      << defaults.cap_for(kind) << "; enumerating about " << enumeration_size(kind, n)
      << " permutations per size\n";
}

std::vector<PathKind> parse_path_selection(const std::string& text) {
  std::vector<PathKind> kinds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "all") return {PathKind::H0, PathKind::H1, PathKind::V0, PathKind::V1};
    kinds.push_back(parse_path_kind(item));
  }
  if (kinds.empty()) throw ParseError("--paths needs h0, h1, v0, v1 or all");
  return kinds;
}

GridPoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point '" + text + "' is not of the form r,c");
  return {parse_int(text.substr(0, comma), "point row"), parse_int(text.substr(comma + 1), "point column")};
}

PermKind check_perm_kind(CheckId id) {
  switch (id) {
    case CheckId::recI:
    case CheckId::bijection_I:
    case CheckId::gf_I:
    case CheckId::unimodal:
      return PermKind::involutions;
    case CheckId::recJ:
    case CheckId::bijection_J:
    case CheckId::gf_J:
      return PermKind::ffi;
    default:
      return PermKind::all;
  }
}

struct Flags {
  std::string config_path;
  std::optional<int> workers, cap_all, cap_inv, cap_ffi, gf_margin;
  int verbose = 0;
  bool quiet = false;

  std::string perm;
  std::string kind;
  bool svg = false, ascii = false, dtypes = false;
  std::string paths;
  std::string point;
  bool census = false;
  int n = 0;
  std::string method = "brute";
  std::string format;
  std::optional<int> position;
  std::string check;
  int n_max = 0;
  std::optional<int> companion_max;
  bool timing = false;
};

RunConfig resolve_config(const Flags& f, const EnvLookup& env) {
  RunConfig c;
  std::string path = f.config_path;
  if (path.empty()) {
    if (auto p = env("PERMGRID_CONFIG")) path = *p;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    apply_config_text(c, text.str());
  }
  apply_environment(c, env);
  if (f.workers) c.workers = *f.workers;
  if (f.cap_all) c.caps.all = *f.cap_all;
  if (f.cap_inv) c.caps.involutions = *f.cap_inv;
  if (f.cap_ffi) c.caps.ffi = *f.cap_ffi;
  if (f.gf_margin) c.gf_margin = *f.gf_margin;
  if (f.quiet) c.verbosity = 0;
  c.verbosity += f.verbose;
  c.validate();
  return c;
}

TableOptions table_options(const RunConfig& c) { return {c.caps, c.workers}; }

int cmd_stats(const Flags& f, std::ostream& out) {
  out << stats_json(Permutation::parse(f.perm)).dump(2) << '\n';
  return kExitOk;
}

int cmd_grid(const Flags& f, const RunConfig& c, std::ostream& out) {
  const Permutation pi = Permutation::parse(f.perm);
  const std::vector<PathKind> kinds = f.paths.empty() ? std::vector<PathKind>{} : parse_path_selection(f.paths);
  const bool svg = f.svg || (!f.ascii && c.format == "svg");
  if (svg) {
    out << render_svg(pi, kinds, f.dtypes, c.svg);
    return kExitOk;
  }
  out << render_ascii(pi, f.dtypes);
  if (!kinds.empty() && pi.size() >= 1) {
    const PathSet paths = trace_paths(pi);
    auto list = [&](const std::vector<Path>& ps) {
      for (const Path& p : ps) {
        bool wanted = false;
        for (PathKind k : kinds) wanted = wanted || k == p.kind;
        if (!wanted) continue;
        out << to_string(p.kind) << ':';
        for (const GridPoint& pt : p.points) out << " (" << pt.row << ',' << pt.col << ')';
        out << '\n';
      }
    };
    list(paths.horizontal());
    list(paths.vertical());
  }
  return kExitOk;
}

int cmd_dtype(const Flags& f, std::ostream& out) {
  const Permutation pi = Permutation::parse(f.perm);
  Json j;
  j["perm"] = pi.str();
  if (!f.point.empty()) {
    const GridPoint pt = parse_point(f.point);
    if (!in_grid(pi, pt)) throw DomainError("point lies outside the grid");
    const DType d = dtype(pi, pt);
    j["point"] = Json::array({pt.row, pt.col});
    j["dtype"] = Json::array({d.p, d.q});
    const DType via = dtype_via_paths(pi, pt);
    j["dtype_via_paths"] = Json::array({via.p, via.q});
  } else {
    const DTypeCensus seen = dtype_census(pi);
    const DTypeCensus formula = census_formula(pi.size(), descent_profile(pi));
    auto census_json = [](const DTypeCensus& c) {
      Json o;
      for (int idx : {0, 2, 1, 3}) {
        const DType d = DType::from_index(idx);
        o[std::to_string(d.p) + std::to_string(d.q)] = c.counts[idx];
      }
      return o;
    };
    j["census"] = census_json(seen);
    j["formula"] = census_json(formula);
    j["total"] = seen.total();
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_table(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream& err) {
  const StatKind kind = parse_stat_kind(f.kind);
  const TableMethod method = parse_table_method(f.method);
  const std::string format = !f.format.empty() ? f.format : c.format == "csv" ? "csv" : "json";
  if (format != "json" && format != "csv") throw ParseError("table --format must be json or csv");
  if (method != TableMethod::recurrence) {
    warn_cost(kind == StatKind::A ? PermKind::all : kind == StatKind::I ? PermKind::involutions : PermKind::ffi,
              f.n, c.caps, err);
  }
  const StatTable t = table(kind, f.n, method, table_options(c));
  if (format == "csv") out << to_csv(t);
  else out << to_json(t).dump(2) << '\n';
  return kExitOk;
}

int cmd_theta(const Flags& f, std::ostream& out) {
  const StatKind kind = parse_stat_kind(f.kind);
  const Permutation pi = Permutation::parse(f.perm);
  const int n = pi.size();
  std::vector<int> positions;
  if (f.position) {
    if (*f.position < 1 || *f.position > n) throw DomainError("--i must lie in 1..n");
    positions.push_back(*f.position);
  } else {
    for (int i = 1; i <= n; ++i) positions.push_back(i);
  }
  Json rows = Json::array();
  for (int i : positions) {
    switch (kind) {
      case StatKind::A: rows.push_back(theta_A_json(pi, i)); break;
      case StatKind::I: rows.push_back(to_json(theta_I(pi, i))); break;
      case StatKind::J: rows.push_back(to_json(theta_J(pi, i))); break;
    }
  }
  out << rows.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<CheckId> ids;
  if (f.check == "all") ids = all_checks();
  else ids.push_back(parse_check_id(f.check));
  VerifyOptions options;
  options.tables = table_options(c);
  options.gf_margin = c.gf_margin;
  options.companion_max = f.companion_max;
  for (CheckId id : ids) warn_cost(check_perm_kind(id), f.n_max, c.caps, err);

  const std::vector<CheckReport> reports = run_checks(ids, f.n_max, options);
  bool all_passed = true;
  Json j;
  Json arr = Json::array();
  for (const CheckReport& r : reports) {
    all_passed = all_passed && r.passed;
    arr.push_back(to_json(r, f.timing));
  }
  j["passed"] = all_passed;
  j["checks"] = std::move(arr);
  out << j.dump(2) << '\n';
  if (c.verbosity >= 1) {
    for (const CheckReport& r : reports) {
      err << (r.passed ? "PASS " : "FAIL ") << r.name << " n<=" << r.n_max;
      for (const auto& [name, value] : r.counts) err << ' ' << name << '=' << value;
      if (f.timing || c.verbosity >= 2) err << " (" << r.elapsed_ms << " ms)";
      err << '\n';
      if (r.counterexample) err << "  counterexample: " << *r.counterexample << '\n';
    }
  }
  return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

void RunConfig::validate() const {
  if (caps.all < 1 || caps.involutions < 1 || caps.ffi < 1) {
    throw PreconditionError("enumeration caps must be positive");
  }
  if (workers < 1) throw PreconditionError("worker count must be at least 1");
}

std::optional<std::string> process_env(const char* name) {
  if (const char* v = std::getenv(name)) return std::string(v);
  return std::nullopt;
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // '#' opens a comment only at line start or after whitespace, so colors like #eeeeee survive.
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '#' && (k == 0 || std::isspace(static_cast<unsigned char>(line[k - 1])))) {
        line.erase(k);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    set_key(config, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
  }
}

void apply_environment(RunConfig& config, const EnvLookup& env) {
  static constexpr std::pair<const char*, const char*> vars[] = {
      {"PERMGRID_WORKERS", "workers"},     {"PERMGRID_CAP_ALL", "cap_all"},
      {"PERMGRID_CAP_INVOLUTIONS", "cap_involutions"}, {"PERMGRID_CAP_FFI", "cap_ffi"},
      {"PERMGRID_GF_MARGIN", "gf_margin"}, {"PERMGRID_FORMAT", "format"},
  };
  for (const auto& [var, key] : vars) {
    if (auto v = env(var)) set_key(config, key, *v);
  }
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  CLI::App app{"Descent statistics, permutation grids and recurrence bijections", "permgrid"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Flags f;
  app.add_option("--config", f.config_path, "key = value settings file");
  app.add_option("--workers", f.workers, "worker threads");
  app.add_option("--cap-all", f.cap_all, "largest S_n enumerated");
  app.add_option("--cap-involutions", f.cap_inv, "largest involution size enumerated");
  app.add_option("--cap-ffi", f.cap_ffi, "largest fixed-point-free size enumerated");
  app.add_option("--gf-margin", f.gf_margin, "extra t-order beyond the u-order in gf checks");
  app.add_flag("-v,--verbose", f.verbose, "more detail on stderr");
  app.add_flag("-q,--quiet", f.quiet, "no summary on stderr");

  auto* stats = app.add_subcommand("stats", "descent statistics of a permutation");
  stats->add_option("perm", f.perm, "e.g. 264135 or 2,6,4,1,3,5")->required();

  auto* grid = app.add_subcommand("grid", "draw the permutation grid");
  grid->add_option("perm", f.perm)->required();
  auto* svg_flag = grid->add_flag("--svg", f.svg, "SVG output");
  grid->add_flag("--ascii", f.ascii, "text output (default)")->excludes(svg_flag);
  grid->add_flag("--dtypes", f.dtypes, "show the d-type of every grid point");
  grid->add_option("--paths", f.paths, "h0, h1, v0, v1 (comma separated) or all");
  std::string fill, hcol, vcol, xcol;
  grid->add_option("--fill-color", fill, "filled square colour");
  grid->add_option("--h-color", hcol, "horizontal path colour");
  grid->add_option("--v-color", vcol, "vertical path colour");
  grid->add_option("--x-color", xcol, "intersection marker colour");

  auto* dt = app.add_subcommand("dtype", "d-type of a grid point, or the census");
  dt->add_option("perm", f.perm)->required();
  auto* point_opt = dt->add_option("--point", f.point, "grid point r,c");
  dt->add_flag("--census", f.census, "count grid points by d-type (default)")->excludes(point_opt);

  auto* tab = app.add_subcommand("table", "A, I or J table");
  tab->add_option("kind", f.kind, "A | I | J")->required();
  tab->add_option("--n", f.n, "size")->required();
  tab->add_option("--method", f.method, "brute | recurrence | bijective");
  tab->add_option("--format", f.format, "json | csv");

  auto* th = app.add_subcommand("theta", "trace the inverse bijection");
  th->add_option("kind", f.kind, "A | I | J")->required();
  th->add_option("--perm", f.perm)->required();
  th->add_option("--i", f.position, "single position; all positions when omitted");

  auto* ver = app.add_subcommand("verify", "run an exhaustive check");
  ver->add_option("check", f.check,
                  "recA recI recJ census paths bijection-A bijection-I bijection-J gf-I gf-J unimodal "
                  "marginal roundtrip | all")
      ->required();
  ver->add_option("--n-max", f.n_max, "largest size checked")->required();
  ver->add_option("--companion-max", f.companion_max,
                  "fixed-point-free bound for unimodal, involution bound for roundtrip");
  ver->add_flag("--timing", f.timing, "include elapsed time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    RunConfig config = resolve_config(f, env);
    if (!fill.empty()) config.svg.fill = fill;
    if (!hcol.empty()) config.svg.horizontal = hcol;
    if (!vcol.empty()) config.svg.vertical = vcol;
    if (!xcol.empty()) config.svg.intersection = xcol;
    if (*stats) return cmd_stats(f, out);
    if (*grid) return cmd_grid(f, config, out);
    if (*dt) return cmd_dtype(f, out);
    if (*tab) return cmd_table(f, config, out, err);
    if (*th) return cmd_theta(f, out);
    if (*ver) return cmd_verify(f, config, out, err);
  } catch (const InvariantError& e) {
    err << "error: internal invariant violated: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::logic_error& e) {  // parse, precondition and domain errors
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInvalid;
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err, env);
}

}  // namespace permgrid
