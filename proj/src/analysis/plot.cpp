#include "flavorbench/analysis/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"

namespace flavorbench::analysis {

namespace {

std::string format_double(double value, const char* spec = "%.6f") {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// 21 visually distinct fills, assigned to categories in sorted order.
const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39",
    "#7b4173", "#3182bd", "#e6550d", "#31a354", "#756bb1", "#636363", "#9c9ede",
};

}  // namespace

void emit_plot_data(const PcaResult& result, const dataset::FoodStore& foods,
                    const std::filesystem::path& out_dir) {
  if (result.projections.empty() || result.row_ids.empty()) {
    throw DataError("emit_plot_data: empty PCA result");
  }
  if (result.components.size() < 2) {
    throw DataError("emit_plot_data: need at least 2 components for a scatter");
  }
  if (result.row_ids.size() != result.projections.size()) {
    throw DataError("emit_plot_data: row ids and projections disagree");
  }
  ensure_directory(out_dir);

  std::string csv = "food_id,name,category,pc1,pc2\n";
  double min_x = result.projections[0][0], max_x = min_x;
  double min_y = result.projections[0][1], max_y = min_y;
  struct Point {
    double x, y;
    std::string category;
  };
  std::vector<Point> points;
  points.reserve(result.row_ids.size());

  for (std::size_t i = 0; i < result.row_ids.size(); ++i) {
    const auto* food = foods.find(result.row_ids[i]);
    if (food == nullptr) {
      throw DataError("emit_plot_data: unknown food id " + std::to_string(result.row_ids[i]));
    }
    const double x = result.projections[i][0];
    const double y = result.projections[i][1];
    min_x = std::min(min_x, x); max_x = std::max(max_x, x);
    min_y = std::min(min_y, y); max_y = std::max(max_y, y);
    csv += std::to_string(food->food_id) + "," + csv_escape(food->name) + "," +
           csv_escape(food->category) + "," + format_double(x) + "," + format_double(y) + "\n";
    points.push_back({x, y, food->category});
  }
  atomic_write_file(out_dir / "pca.csv", csv);

  std::map<std::string, std::size_t> category_colors;
  for (const auto& point : points) {
    category_colors.emplace(point.category, category_colors.size());
  }

  const double width = 800.0, height = 600.0, margin = 50.0;
  const double span_x = std::max(max_x - min_x, 1e-12);
  const double span_y = std::max(max_y - min_y, 1e-12);
  const auto scale_x = [&](double x) {
    return margin + (x - min_x) / span_x * (width - 2 * margin);
  };
  const auto scale_y = [&](double y) {
    return height - margin - (y - min_y) / span_y * (height - 2 * margin);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  svg += "<line x1=\"50\" y1=\"550\" x2=\"750\" y2=\"550\" stroke=\"black\"/>\n";
  svg += "<line x1=\"50\" y1=\"50\" x2=\"50\" y2=\"550\" stroke=\"black\"/>\n";
  svg += "<text x=\"400\" y=\"585\" text-anchor=\"middle\" font-size=\"14\">PC1</text>\n";
  svg += "<text x=\"18\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" "
         "transform=\"rotate(-90 18 300)\">PC2</text>\n";
  for (const auto& point : points) {
    const auto color_index = category_colors.at(point.category) % std::size(kPalette);
    svg += "<circle cx=\"" + format_double(scale_x(point.x), "%.2f") + "\" cy=\"" +
           format_double(scale_y(point.y), "%.2f") + "\" r=\"3\" fill=\"" +
           kPalette[color_index] + "\" fill-opacity=\"0.8\"/>\n";
  }
  double legend_y = 60.0;
  for (const auto& [category, index] : category_colors) {
    svg += "<circle cx=\"760\" cy=\"" + format_double(legend_y, "%.1f") + "\" r=\"4\" fill=\"" +
           kPalette[index % std::size(kPalette)] + "\"/>\n";
    svg += "<text x=\"770\" y=\"" + format_double(legend_y + 4, "%.1f") +
           "\" font-size=\"10\" text-anchor=\"start\">" + category + "</text>\n";
    legend_y += 14.0;
  }
  svg += "</svg>\n";
  atomic_write_file(out_dir / "pca.svg", svg);
}

}  // namespace flavorbench::analysis
