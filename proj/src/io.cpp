#include "arctic/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arctic/errors.hpp"

namespace arctic {

std::optional<FileFormat> format_from_name(const std::string& s) {
  if (s == "csv") return FileFormat::CSV;
  if (s == "json") return FileFormat::JSON;
  if (s == "svg") return FileFormat::SVG;
  return std::nullopt;
}

std::string curve_csv(const std::vector<Branch>& branches, int digits) {
  std::ostringstream os;
  os << "model,branch,xi,x,y,A,B\n";
  for (const Branch& b : branches) {
    for (size_t i = 0; i < b.points.size(); ++i) {
      os << model_name(b.model) << ',' << branch_name(b.id) << ','
         << b.lines[i].xi.to_string(digits) << ',' << b.points[i].x.to_string(digits) << ','
         << b.points[i].y.to_string(digits) << ',' << b.lines[i].A.to_string(digits) << ','
         << b.lines[i].B.to_string(digits) << '\n';
    }
  }
  return os.str();
}

std::string curve_json(const std::vector<Branch>& branches, int digits) {
  nlohmann::json root;
  root["branches"] = nlohmann::json::array();
  for (const Branch& b : branches) {
    nlohmann::json jb;
    jb["model"] = model_name(b.model);
    jb["branch"] = branch_name(b.id);
    jb["xi_range"] = {b.xi_lo.to_string(digits), b.xi_hi.to_string(digits)};
    jb["points"] = nlohmann::json::array();
    for (size_t i = 0; i < b.points.size(); ++i) {
      jb["points"].push_back({{"xi", b.lines[i].xi.to_string(digits)},
                              {"x", b.points[i].x.to_string(digits)},
                              {"y", b.points[i].y.to_string(digits)},
                              {"A", b.lines[i].A.to_string(digits)},
                              {"B", b.lines[i].B.to_string(digits)}});
    }
    root["branches"].push_back(std::move(jb));
  }
  return root.dump(2) + "\n";
}

namespace {

// Rescaled-domain outlines, counterclockwise from the SE corner.
std::vector<std::pair<double, double>> domain_outline(Model m) {
  switch (m) {
    case Model::SixV:
      return {{0, 0}, {0, 1}, {-1, 1}, {-1, 0}};
    case Model::SixVPrime:
      return {{0, 0}, {0, 2}, {-1, 2}, {-1, 0}};
    case Model::TwentyV:
      return {{0, 0}, {0, 2}, {-1, 2}, {-1, 1}};
    case Model::DT:
      return {{0, 0}, {0, 2}, {-2, 0}};
  }
  return {};
}

}  // namespace

std::string curve_svg(Model model, const std::vector<Branch>& branches) {
  const double scale = 400.0;  // px per unit, y flipped
  auto outline = domain_outline(model);
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (auto [x, y] : outline) grow(x, y);
  for (const Branch& b : branches)
    for (const CurvePoint& p : b.points) grow(p.x.to_double(), p.y.to_double());
  const double pad = 0.08 * std::max(xmax - xmin, ymax - ymin);
  xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
  auto px = [&](double x) { return (x - xmin) * scale; };
  auto py = [&](double y) { return (ymax - y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax - xmin) * scale
     << "\" height=\"" << (ymax - ymin) * scale << "\">\n";
  os << "  <polygon points=\"";
  for (auto [x, y] : outline) os << px(x) << ',' << py(y) << ' ';
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  const char* colors[] = {"crimson", "steelblue", "darkgreen", "darkorange", "purple"};
  int ci = 0;
  for (const Branch& b : branches) {
    os << "  <polyline points=\"";
    for (const CurvePoint& p : b.points)
      os << px(p.x.to_double()) << ',' << py(p.y.to_double()) << ' ';
    os << "\" fill=\"none\" stroke=\"" << colors[ci % 5] << "\" stroke-width=\"2\"/>\n";
    ++ci;
  }
  os << "</svg>\n";
  return os.str();
}

std::string cruciform_svg(const Branch& dt_full) {
  const double scale = 200.0;
  const double ext = 2.35;
  auto px = [&](double x) { return (x + ext) * scale; };
  auto py = [&](double y) { return (ext - y) * scale; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * ext * scale
     << "\" height=\"" << 2 * ext * scale << "\">\n";
  os << "  <title>conjectural composition</title>\n";
  // the triangle and its seven reflected copies
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sy = -1; sy <= 1; sy += 2)
      for (int swap = 0; swap < 2; ++swap) {
        auto map = [&](double x, double y) {
          if (swap) std::swap(x, y);
          return std::pair<double, double>{sx * x, sy * y};
        };
        auto [x0, y0] = map(0, 0);
        auto [x1, y1] = map(0, 2);
        auto [x2, y2] = map(-2, 0);
        os << "  <polygon points=\"" << px(x0) << ',' << py(y0) << ' ' << px(x1) << ','
           << py(y1) << ' ' << px(x2) << ',' << py(y2)
           << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
        os << "  <polyline points=\"";
        for (const CurvePoint& p : dt_full.points) {
          auto [x, y] = map(p.x.to_double(), p.y.to_double());
          os << px(x) << ',' << py(y) << ' ';
        }
        os << "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
      }
  os << "  <text x=\"10\" y=\"20\" font-size=\"14\">conjectural composition</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<CurveRow> parse_curve_csv(const std::string& text, mpfr_prec_t precision) {
  std::vector<CurveRow> rows;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f[7];
    for (int i = 0; i < 7; ++i)
      if (!std::getline(ls, f[i], ',')) throw DomainError("parse_curve_csv: short row");
    rows.push_back(CurveRow{f[0], f[1], MPScalar(f[2], precision), MPScalar(f[3], precision),
                            MPScalar(f[4], precision), MPScalar(f[5], precision),
                            MPScalar(f[6], precision)});
  }
  return rows;
}

std::string table_csv(const Table& t) {
  std::ostringstream os;
  for (size_t i = 0; i < t.header.size(); ++i)
    os << t.header[i] << (i + 1 < t.header.size() ? ',' : '\n');
  for (const auto& r : t.rows)
    for (size_t i = 0; i < r.size(); ++i) os << r[i] << (i + 1 < r.size() ? ',' : '\n');
  return os.str();
}

std::string table_json(const Table& t) {
  nlohmann::json root = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row;
    for (size_t i = 0; i < r.size() && i < t.header.size(); ++i) row[t.header[i]] = r[i];
    root.push_back(std::move(row));
  }
  return root.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DomainError("cannot open for writing: " + path);
  os << content;
  if (!os) throw DomainError("write failed: " + path);
}

}  // namespace arctic
