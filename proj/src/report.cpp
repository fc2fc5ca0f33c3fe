// Copyright 2026 The stylofair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "stylofair/error.hpp"
#include "stylofair/experiments.hpp"
#include "stylofair/ndjson.hpp"

namespace stylofair::experiments {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed plot frame: y axis spans [0, 1].
struct Frame {
  double width = 640, height = 420;
  double left = 70, right = 20, top = 40, bottom = 60;

  double plot_w() const { return width - left - right; }
  double plot_h() const { return height - top - bottom; }
  double y(double v) const { return top + (1.0 - std::clamp(v, 0.0, 1.0)) * plot_h(); }
};

void svg_open(std::ostringstream& out, const Frame& f, const std::string& title, const std::string& y_label) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << px(f.width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(title) << "</text>\n";
  out << "<line x1=\"" << f.left << "\" y1=\"" << f.top << "\" x2=\"" << f.left << "\" y2=\""
      << px(f.top + f.plot_h()) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << f.left << "\" y1=\"" << px(f.top + f.plot_h()) << "\" x2=\""
      << px(f.left + f.plot_w()) << "\" y2=\"" << px(f.top + f.plot_h()) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = i / 4.0;
    out << "<line x1=\"" << px(f.left - 5) << "\" y1=\"" << px(f.y(v)) << "\" x2=\"" << f.left
        << "\" y2=\"" << px(f.y(v)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(f.left - 8) << "\" y=\"" << px(f.y(v) + 4) << "\" text-anchor=\"end\">"
        << px(v) << "</text>\n";
  }
  out << "<text transform=\"translate(18," << px(f.top + f.plot_h() / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(y_label) << "</text>\n";
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::string boxplot_svg(const std::string& title, const std::string& y_label,
                        const std::vector<std::pair<std::string, std::vector<double>>>& groups) {
  Frame f;
  std::ostringstream out;
  svg_open(out, f, title, y_label);
  const double slot = f.plot_w() / static_cast<double>(std::max<size_t>(groups.size(), 1));
  for (size_t g = 0; g < groups.size(); ++g) {
    const double cx = f.left + slot * (static_cast<double>(g) + 0.5);
    const double half = std::min(40.0, slot * 0.3);
    out << "<text x=\"" << px(cx) << "\" y=\"" << px(f.top + f.plot_h() + 20)
        << "\" text-anchor=\"middle\">" << xml_escape(groups[g].first) << "</text>\n";
    const auto& v = groups[g].second;
    out << "<text x=\"" << px(cx) << "\" y=\"" << px(f.top + f.plot_h() + 36)
        << "\" text-anchor=\"middle\" font-size=\"10\">n=" << v.size() << "</text>\n";
    if (v.empty()) continue;
    const double q1 = quantile(v, 0.25), med = quantile(v, 0.5), q3 = quantile(v, 0.75);
    const double iqr = q3 - q1;
    double lo = q3, hi = q1;
    for (double x : v) {
      if (x >= q1 - 1.5 * iqr) lo = std::min(lo, x);
      if (x <= q3 + 1.5 * iqr) hi = std::max(hi, x);
    }
    out << "<line x1=\"" << px(cx) << "\" y1=\"" << px(f.y(hi)) << "\" x2=\"" << px(cx) << "\" y2=\""
        << px(f.y(q3)) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(cx) << "\" y1=\"" << px(f.y(q1)) << "\" x2=\"" << px(cx) << "\" y2=\""
        << px(f.y(lo)) << "\" stroke=\"black\"/>\n";
    for (double w : {lo, hi})
      out << "<line x1=\"" << px(cx - half / 2) << "\" y1=\"" << px(f.y(w)) << "\" x2=\""
          << px(cx + half / 2) << "\" y2=\"" << px(f.y(w)) << "\" stroke=\"black\"/>\n";
    out << "<rect x=\"" << px(cx - half) << "\" y=\"" << px(f.y(q3)) << "\" width=\"" << px(2 * half)
        << "\" height=\"" << px(std::max(0.0, f.y(q1) - f.y(q3)))
        << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(cx - half) << "\" y1=\"" << px(f.y(med)) << "\" x2=\"" << px(cx + half)
        << "\" y2=\"" << px(f.y(med)) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    for (double x : v)
      if (x < lo || x > hi)
        out << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(f.y(x)) << "\" r=\"2.5\" fill=\"none\" stroke=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string sweep_svg(const SweepResult& r) {
  Frame f;
  std::ostringstream out;
  const std::string title = "Composition sweep: " + r.setup.dc + " vs " + r.setup.ndc +
                            ", n=" + std::to_string(r.setup.n);
  svg_open(out, f, title, std::string(to_string(r.metric_kind)));
  const double n = static_cast<double>(r.setup.n);
  auto x = [&](double k) { return f.left + (n > 0 ? k / n : 0.0) * f.plot_w(); };
  for (size_t k = 0; k <= r.setup.n; ++k) {
    out << "<line x1=\"" << px(x(k)) << "\" y1=\"" << px(f.top + f.plot_h()) << "\" x2=\"" << px(x(k))
        << "\" y2=\"" << px(f.top + f.plot_h() + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(x(k)) << "\" y=\"" << px(f.top + f.plot_h() + 18)
        << "\" text-anchor=\"middle\">" << k << "</text>\n";
  }
  out << "<text x=\"" << px(f.left + f.plot_w() / 2) << "\" y=\"" << px(f.height - 12)
      << "\" text-anchor=\"middle\">number of " << xml_escape(r.setup.dc) << " authors in the suspect set</text>\n";
  for (const auto& p : r.points)
    out << "<circle cx=\"" << px(x(static_cast<double>(p.k))) << "\" cy=\"" << px(f.y(p.metric))
        << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.6\"/>\n";
  out << "<line x1=\"" << px(x(0)) << "\" y1=\"" << px(f.y(r.fit.intercept)) << "\" x2=\"" << px(x(n))
      << "\" y2=\"" << px(f.y(r.fit.intercept + r.fit.slope * n)) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  char label[160];
  std::snprintf(label, sizeof label, "y = %.3f + %.4f x   mse %.4f   r2 %.3f", r.fit.intercept,
                r.fit.slope, r.fit.mse, r.fit.r2);
  out << "<text x=\"" << px(f.left + 10) << "\" y=\"" << px(f.top + 14) << "\">" << label << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::vector<double> values(const std::vector<AuthorRate>& rates) {
  std::vector<double> v;
  for (const auto& r : rates) v.push_back(r.value);
  return v;
}

std::string size_tag(size_t n) { return n == 0 ? "pooled" : "n=" + std::to_string(n); }

}  // namespace

std::vector<std::filesystem::path> emit_report(const AuditResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto put = [&](const std::string& name, const std::string& contents) {
    write_file(dir / name, contents);
    written.push_back(dir / name);
  };
  const std::string summary = to_json(result).dump(2) + "\n";

  if (const auto* r = std::get_if<SweepResult>(&result)) {
    std::string csv = "k,repeat,metric\n";
    for (const auto& p : r->points) csv += std::to_string(p.k) + "," + std::to_string(p.repeat) + "," + num(p.metric) + "\n";
    put("sweep_points.csv", csv);
    put("sweep.json", summary);
    put("sweep.svg", sweep_svg(*r));
  } else if (const auto* r = std::get_if<OddsResult>(&result)) {
    std::string csv = "group,author_id,label,n,repeat,p_mis\n";
    for (const auto* rates : {&r->dc_values, &r->ndc_values})
      for (const auto& a : *rates)
        csv += std::string(rates == &r->dc_values ? "dc" : "ndc") + "," + csv_field(a.author_id) + "," +
               csv_field(a.label) + "," + std::to_string(a.n) + "," + std::to_string(a.repeat) + "," +
               num(a.value) + "\n";
    put("odds_values.csv", csv);
    put("odds.json", summary);
    put("odds.svg", boxplot_svg("P(mis | group), " + size_tag(r->setup.n), "misclassification probability",
                                {{r->setup.dc, values(r->dc_values)}, {r->setup.ndc, values(r->ndc_values)}}));
  } else if (const auto* r = std::get_if<ForcedResult>(&result)) {
    std::string csv = "author_id,label,n,repeat,intra,inter\n";
    for (const auto& h : r->rates)
      csv += csv_field(h.author_id) + "," + csv_field(h.label) + "," + std::to_string(h.n) + "," +
             std::to_string(h.repeat) + "," + num(h.intra) + "," + num(h.inter) + "\n";
    put("forced_rates.csv", csv);
    put("forced.json", summary);
    const std::string& dc = r->setup.dc;
    const std::string& ndc = r->setup.ndc;
    put("forced.svg",
        boxplot_svg("Forced misclassification, " + size_tag(r->setup.n), "assignment rate",
                    {{"P(" + dc + "|" + dc + ")", r->dist_dc_dc()},
                     {"P(" + ndc + "|" + dc + ")", r->dist_ndc_dc()},
                     {"P(" + ndc + "|" + ndc + ")", r->dist_ndc_ndc()},
                     {"P(" + dc + "|" + ndc + ")", r->dist_dc_ndc()}}));
  }
  return written;
}

}  // namespace stylofair::experiments
