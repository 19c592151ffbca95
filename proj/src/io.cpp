#include "permgrid/io.hpp"

#include <set>
#include <sstream>

namespace permgrid {

namespace {

Json point_json(GridPoint pt) { return Json::array({pt.row, pt.col}); }

std::vector<int> descent_positions(const Permutation& pi) {
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1)) out.push_back(i);
  }
  return out;
}

}  // namespace

Json stats_json(const Permutation& pi) {
  const DescentProfile prof = descent_profile(pi);
  Json j;
  j["perm"] = pi.str();
  j["n"] = pi.size();
  j["des"] = prof.des;
  j["ides"] = prof.ides;
  j["descent_set"] = descent_positions(pi);
  j["idescent_set"] = descent_positions(inverse(pi));
  j["inverse"] = inverse(pi).str();
  j["involution"] = is_involution(pi);
  j["fixed_point_free"] = is_fixed_point_free_involution(pi);
  return j;
}

Json to_json(const StatTable& table) {
  Json j;
  j["kind"] = std::string(to_string(table.kind()));
  j["n"] = table.n();
  j["method"] = std::string(to_string(table.method()));
  Json entries = Json::array();
  const int n = table.n();
  if (table.kind() == StatKind::A) {
    for (int i = 1; i <= n; ++i) {
      for (int c = 1; c <= n; ++c) entries.push_back(Json::array({i, c, table.a(i, c).str()}));
    }
  } else {
    for (int k = 0; k < n; ++k) entries.push_back(Json::array({k, table.k(k).str()}));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string to_csv(const StatTable& table) {
  std::ostringstream os;
  const int n = table.n();
  if (table.kind() == StatKind::A) {
    os << "i,j,value\n";
    for (int i = 1; i <= n; ++i) {
      for (int c = 1; c <= n; ++c) os << i << ',' << c << ',' << table.a(i, c) << '\n';
    }
  } else {
    os << "k,value\n";
    for (int k = 0; k < n; ++k) os << k << ',' << table.k(k) << '\n';
  }
  return os.str();
}

Json to_json(const ThetaTrace& trace) {
  const auto [n, k] = trace.target_nk();
  Json j;
  j["input_perm"] = trace.input.str();
  j["i"] = trace.position;
  j["case"] = trace.case_name;
  j["output_perm"] = trace.output.sigma.str();
  j["point"] = point_json(trace.output.point);
  j["tag"] = trace.output.tag ? Json(*trace.output.tag) : Json(nullptr);
  j["subset"] = trace.output.label.str();
  j["target_nk"] = Json::array({n, k});
  return j;
}

Json theta_A_json(const Permutation& pi, int k) {
  const PointedPermutation image = theta_A(pi, k);
  Json j;
  j["input_perm"] = pi.str();
  j["i"] = k;
  j["case"] = "delete_square";
  j["output_perm"] = image.sigma.str();
  j["point"] = point_json(image.point);
  j["tag"] = nullptr;
  j["subset"] = dtype(image.sigma, image.point).str();
  j["target_nk"] = Json::array({image.sigma.size(), descents(image.sigma)});
  return j;
}

Json to_json(const Path& path) {
  Json j;
  j["kind"] = std::string(to_string(path.kind));
  Json pts = Json::array();
  for (const GridPoint& pt : path.points) pts.push_back(point_json(pt));
  j["points"] = std::move(pts);
  return j;
}

Json to_json(const CheckReport& report, bool timing) {
  Json j;
  j["check"] = report.name;
  j["n_max"] = report.n_max;
  j["passed"] = report.passed;
  Json counts = Json::object();
  for (const auto& [name, value] : report.counts) counts[name] = value;
  j["counts"] = std::move(counts);
  j["counterexample"] = report.counterexample ? Json(*report.counterexample) : Json(nullptr);
  if (timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string render_ascii(const Permutation& pi, bool dtypes) {
  const int n = pi.size();
  std::ostringstream os;
  auto corner = [&](int r, int c) -> char {
    return dtypes ? static_cast<char>('0' + dtype(pi, {r, c}).index()) : '+';
  };
  for (int r = 1; r <= n + 1; ++r) {
    for (int c = 1; c <= n + 1; ++c) os << corner(r, c) << (c <= n ? "---" : "");
    os << '\n';
    if (r > n) break;
    for (int c = 1; c <= n; ++c) os << '|' << (pi.at(r) == c ? "###" : "   ");
    os << "|\n";
  }
  if (dtypes) os << "corners: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1)\n";
  return os.str();
}

std::string render_svg(const Permutation& pi, const std::vector<PathKind>& kinds, bool dtypes,
                       const SvgStyle& style) {
  const int n = pi.size();
  const int s = style.cell, m = style.margin;
  const int side = 2 * m + n * s;
  auto x = [&](int col) { return m + (col - 1) * s; };
  auto y = [&](int row) { return m + (row - 1) * s; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int r = 1; r <= n; ++r) {
    os << "<rect x=\"" << x(pi.at(r)) << "\" y=\"" << y(r) << "\" width=\"" << s << "\" height=\"" << s
       << "\" fill=\"" << style.fill << "\"/>\n";
  }
  os << "<g stroke=\"" << style.grid << "\" stroke-width=\"1\">\n";
  for (int k = 1; k <= n + 1; ++k) {
    os << "<line x1=\"" << x(1) << "\" y1=\"" << y(k) << "\" x2=\"" << x(n + 1) << "\" y2=\"" << y(k) << "\"/>\n";
    os << "<line x1=\"" << x(k) << "\" y1=\"" << y(1) << "\" x2=\"" << x(k) << "\" y2=\"" << y(n + 1) << "\"/>\n";
  }
  os << "</g>\n";

  const PathSet paths = trace_paths(pi);
  auto wanted = [&](PathKind k) {
    for (PathKind w : kinds) {
      if (w == k) return true;
    }
    return false;
  };
  std::set<GridPoint> on_h, on_v;
  auto draw = [&](const Path& path, const std::string& colour, std::set<GridPoint>& seen) {
    if (!wanted(path.kind)) return;
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < path.points.size(); ++i) {
      os << (i ? " " : "") << x(path.points[i].col) << ',' << y(path.points[i].row);
      seen.insert(path.points[i]);
    }
    os << "\"><title>" << to_string(path.kind) << "</title></polyline>\n";
  };
  for (const Path& p : paths.horizontal()) draw(p, style.horizontal, on_h);
  for (const Path& p : paths.vertical()) draw(p, style.vertical, on_v);
  for (const GridPoint& pt : on_h) {
    if (!on_v.count(pt)) continue;
    os << "<circle cx=\"" << x(pt.col) << "\" cy=\"" << y(pt.row) << "\" r=\"" << std::max(2, s / 8)
       << "\" fill=\"" << style.intersection << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  if (dtypes) {
    os << "<g font-family=\"monospace\" font-size=\"" << std::max(6, s / 3) << "\" fill=\"#000000\">\n";
    for (int r = 1; r <= n + 1; ++r) {
      for (int c = 1; c <= n + 1; ++c) {
        const DType d = dtype(pi, {r, c});
        os << "<text x=\"" << x(c) + 3 << "\" y=\"" << y(r) - 3 << "\">" << d.p << d.q << "</text>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace permgrid
