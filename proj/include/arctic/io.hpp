#pragma once

#include <string>
#include <vector>

#include "arctic/arctic_curve.hpp"

namespace arctic {

enum class FileFormat { CSV, JSON, SVG };
std::optional<FileFormat> format_from_name(const std::string& s);

// Curve emission. CSV columns: model,branch,xi,x,y,A,B. JSON mirrors the
// CSV. SVG draws the rescaled domain outline plus one polyline per branch
// (400 px per unit, y axis flipped).
std::string curve_csv(const std::vector<Branch>& branches, int digits = 30);
std::string curve_json(const std::vector<Branch>& branches, int digits = 30);
std::string curve_svg(Model model, const std::vector<Branch>& branches);

// Visualization of the eightfold reflected DT curve (the conjectural
// cruciform composition); takes the FullAnalytic DT branch.
std::string cruciform_svg(const Branch& dt_full);

struct CurveRow {
  std::string model, branch;
  MPScalar xi, x, y, A, B;
};
// Parses text produced by curve_csv (used by the round-trip checks).
std::vector<CurveRow> parse_curve_csv(const std::string& text, mpfr_prec_t precision);

// Generic small-table emission for the tabulate command.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string table_csv(const Table& t);
std::string table_json(const Table& t);

void write_file(const std::string& path, const std::string& content);

}  // namespace arctic
