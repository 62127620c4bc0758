#include <algorithm>
#include <fstream>
#include <map>
#include <vector>

#include "pommer/harness.hpp"

// Grouped bar chart of win% per vision level, one bar per player, emitted as
// plain SVG markup. Kept dependency-free on purpose.

namespace pommer::harness {

void write_sweep_svg(const std::string& path, const std::vector<SweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);

  std::vector<int> visions;
  std::vector<std::string> players;
  std::map<std::pair<int, std::string>, double> win;
  for (const auto& r : rows) {
    if (std::find(visions.begin(), visions.end(), r.vision) == visions.end())
      visions.push_back(r.vision);
    if (std::find(players.begin(), players.end(), r.player) == players.end())
      players.push_back(r.player);
    win[{r.vision, r.player}] = r.win_pct;
  }
  std::sort(visions.begin(), visions.end());

  const double width = 720, height = 420;
  const double left = 60, right = 20, top = 40, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const double group_w = plot_w / std::max<std::size_t>(1, visions.size());
  const double bar_w = group_w * 0.8 / std::max<std::size_t>(1, players.size());

  static const char* kColors[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756",
                                  "#72b7b2", "#b279a2"};

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  out << "  <title>Win percentage by observability</title>\n";
  out << "  <text x=\"" << width / 2
      << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\" font-family=\"sans-serif\">"
         "Win % by vision range</text>\n";

  // y axis with 0/25/50/75/100 gridlines
  for (int g = 0; g <= 4; ++g) {
    const double pct = g * 25.0;
    const double y = top + plot_h * (1.0 - pct / 100.0);
    out << "  <line x1=\"" << left << "\" y1=\"" << y << "\" x2=\"" << width - right
        << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
    out << "  <text x=\"" << left - 8 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << pct
        << "</text>\n";
  }

  for (std::size_t vi = 0; vi < visions.size(); ++vi) {
    const double gx = left + group_w * static_cast<double>(vi) + group_w * 0.1;
    out << "  <g class=\"vision-group\" data-vision=\"" << visions[vi] << "\">\n";
    for (std::size_t pi = 0; pi < players.size(); ++pi) {
      const auto it = win.find({visions[vi], players[pi]});
      const double pct = it == win.end() ? 0.0 : it->second;
      const double h = plot_h * pct / 100.0;
      const double x = gx + bar_w * static_cast<double>(pi);
      out << "    <rect x=\"" << x << "\" y=\"" << top + plot_h - h << "\" width=\""
          << bar_w * 0.92 << "\" height=\"" << h << "\" fill=\""
          << kColors[pi % 6] << "\"><title>" << players[pi] << " @ vision "
          << visions[vi] << ": " << pct << "%</title></rect>\n";
    }
    out << "    <text x=\"" << gx + group_w * 0.4 << "\" y=\"" << height - bottom + 18
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">vision "
        << visions[vi] << "</text>\n";
    out << "  </g>\n";
  }

  // legend
  for (std::size_t pi = 0; pi < players.size(); ++pi) {
    const double x = left + static_cast<double>(pi) * 150.0;
    const double y = height - 18;
    out << "  <rect x=\"" << x << "\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\""
        << kColors[pi % 6] << "\"/>\n";
    out << "  <text x=\"" << x + 18 << "\" y=\"" << y
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << players[pi] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace pommer::harness
