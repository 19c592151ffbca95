#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permgrid/bijections.hpp"
#include "permgrid/paths.hpp"
#include "permgrid/tables.hpp"
#include "permgrid/verify.hpp"

namespace permgrid {

// Insertion-ordered so that serialized output follows a fixed field order.
using Json = nlohmann::ordered_json;

Json stats_json(const Permutation& pi);

// {kind, n, method, entries: [[i, j, "value"], ...]} for A, [[k, "value"]] for
// I/J. Values are decimal strings.
Json to_json(const StatTable& table);
// Header row "i,j,value" or "k,value".
std::string to_csv(const StatTable& table);

// {input_perm, i, case, output_perm, point, tag, subset, target_nk}
Json to_json(const ThetaTrace& trace);
// Same fields for the Eulerian map; subset is the d-type of the point.
Json theta_A_json(const Permutation& pi, int k);

Json to_json(const Path& path);
Json to_json(const CheckReport& report, bool timing);

// Box drawing of the grid with '#' in filled squares. With `dtypes`, each
// grid corner shows the d-type index 2p+q of that point instead of '+'.
std::string render_ascii(const Permutation& pi, bool dtypes);

struct SvgStyle {
  int cell = 32;
  int margin = 24;
  std::string fill = "#dcdcdc";  // gainsboro
  std::string grid = "#000000";
  std::string horizontal = "#d62728";
  std::string vertical = "#1f4fd6";
  std::string intersection = "#ffd700";
};

// Draws the selected path kinds over the grid and marks grid points shared
// by a drawn horizontal and a drawn vertical path. With `dtypes`, each grid
// point is labelled "pq".
std::string render_svg(const Permutation& pi, const std::vector<PathKind>& kinds, bool dtypes,
                       const SvgStyle& style = {});

}  // namespace permgrid
