#include "wallscale/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace wallscale {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

std::string format_double(double v) { return fmt("%.12g", v); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string field_to_string(const MagnetizationField& field) {
  const StripGrid& g = field.grid;
  std::string s;
  s.reserve(40 + g.size() * 60);
  char buf[192];
  std::snprintf(buf, sizeof(buf), "wallscale-field v1 L=%.17g n1=%zu n3=%zu t=%.17g\n", g.L,
                g.n1, g.n3, g.t);
  s += buf;
  for (std::size_t p = 0; p < g.size(); ++p) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", field.m1[p], field.m2[p],
                  field.m3[p]);
    s += buf;
  }
  return s;
}

void write_field_file(const std::string& path, const MagnetizationField& field,
                      const std::string& config_comment) {
  std::string body = field_to_string(field);
  if (!config_comment.empty()) body += "# " + config_comment + "\n";
  write_text_file(path, body);
}

MagnetizationField read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileParseError(path + ": cannot open");
  std::string line;
  if (!std::getline(in, line)) throw FileParseError(path + ":1: empty file");

  double L = 0.0, t = 0.0;
  std::size_t n1 = 0, n3 = 0;
  {
    std::istringstream hs(line);
    std::string magic, ver, kv;
    hs >> magic >> ver;
    if (magic != "wallscale-field" || ver != "v1")
      throw FileParseError(path + ":1: bad header (expected 'wallscale-field v1')");
    while (hs >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw FileParseError(path + ":1: malformed header token '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string val = kv.substr(eq + 1);
      try {
        if (key == "L") L = std::stod(val);
        else if (key == "t") t = std::stod(val);
        else if (key == "n1") n1 = std::stoul(val);
        else if (key == "n3") n3 = std::stoul(val);
        else throw FileParseError(path + ":1: unknown header key '" + key + "'");
      } catch (const FileParseError&) {
        throw;
      } catch (const std::exception&) {
        throw FileParseError(path + ":1: bad value for '" + key + "'");
      }
    }
  }
  if (!(L > 0.0) || !(t > 0.0) || n1 < 4 || n3 < 2)
    throw FileParseError(path + ":1: invalid grid header");

  MagnetizationField f{StripGrid(L, t, n1, n3)};
  std::size_t want = n1 * n3, got = 0, lineno = 1;
  while (got < want) {
    if (!std::getline(in, line))
      throw FileParseError(path + ":" + std::to_string(lineno + 1) + ": truncated file (" +
                           std::to_string(got) + " of " + std::to_string(want) + " rows)");
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    char* end = nullptr;
    const char* cur = line.c_str();
    double v[3];
    for (int c = 0; c < 3; ++c) {
      v[c] = std::strtod(cur, &end);
      if (end == cur)
        throw FileParseError(path + ":" + std::to_string(lineno) + ": expected 3 numbers, offset " +
                             std::to_string(cur - line.c_str()));
      cur = end;
    }
    f.m1[got] = v[0];
    f.m2[got] = v[1];
    f.m3[got] = v[2];
    ++got;
  }
  return f;
}

std::string sweep_table_csv(const SweepTable& table, const std::string& config_comment,
                            std::uint64_t seed) {
  std::string s;
  s += std::string("# ") + kToolVersion + "\n";
  if (!config_comment.empty()) s += "# config: " + config_comment + "\n";
  s += "# seed: " + std::to_string(seed) + "\n";
  s += "Q,t_over_d,E_bloch,E_neel,E_min,winner,pred_thick,pred_thin,ratio_thick,"
       "ratio_thin,l2_ratio,l1_ratio,lb_ratio,n1,n3,L_over_t,iters_bloch,iters_neel,status\n";
  for (const SweepPoint& p : table.points) {
    s += format_double(p.Q) + "," + format_double(p.t_over_d) + "," +
         format_double(p.E_bloch) + "," + format_double(p.E_neel) + "," +
         format_double(p.E_min) + "," + p.winner + "," + format_double(p.pred_thick) + "," +
         format_double(p.pred_thin) + "," + format_double(p.ratio_thick) + "," +
         format_double(p.ratio_thin) + "," + format_double(p.l2_ratio) + "," +
         format_double(p.l1_ratio) + "," + format_double(p.lb_ratio) + "," +
         std::to_string(p.n1) + "," + std::to_string(p.n3) + "," +
         format_double(p.L_over_t) + "," + std::to_string(p.iters_bloch) + "," +
         std::to_string(p.iters_neel) + "," + p.status + "\n";
  }
  return s;
}

std::string relax_trace_csv(const RelaxReport& report, const std::string& config_comment) {
  std::string s;
  s += std::string("# ") + kToolVersion + "\n";
  if (!config_comment.empty()) s += "# config: " + config_comment + "\n";
  s += "# termination: " + report.termination + "\n";
  s += "iter,exchange,anisotropy,stray,total,grad_norm\n";
  for (const TraceRow& r : report.trace) {
    s += std::to_string(r.iter) + "," + format_double(r.exchange) + "," +
         format_double(r.anisotropy) + "," + format_double(r.stray) + "," +
         format_double(r.total) + "," + format_double(r.grad_norm) + "\n";
  }
  return s;
}

std::string crossover_csv(const std::vector<CrossoverResult>& results,
                          const std::string& config_comment, std::uint64_t seed) {
  std::string s;
  s += std::string("# ") + kToolVersion + "\n";
  if (!config_comment.empty()) s += "# config: " + config_comment + "\n";
  s += "# seed: " + std::to_string(seed) + "\n";
  s += "Q,t_star_over_d,predicted_scale,ratio,probes\n";
  for (const CrossoverResult& r : results) {
    s += format_double(r.Q) + "," + format_double(r.t_star_over_d) + "," +
         format_double(r.predicted_scale) + "," + format_double(r.ratio) + "," +
         std::to_string(r.probes.size()) + "\n";
  }
  return s;
}

std::string sweep_svg(const SweepTable& table, double d) {
  // group usable points by Q
  std::map<double, std::vector<const SweepPoint*>> byQ;
  for (const SweepPoint& p : table.points)
    if (p.status == "ok" && p.E_min > 0.0) byQ[p.Q].push_back(&p);

  const double W = 640, H = 420, ml = 70, mr = 20, mt = 20, mb = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto& [Q, pts] : byQ)
    for (const SweepPoint* p : pts) {
      const double y = std::log10(p->E_min / (d * p->t_over_d * d));  // E/(d t)
      xmin = std::min(xmin, p->t_over_d);
      xmax = std::max(xmax, p->t_over_d);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (byQ.empty()) {
    xmin = 0;
    xmax = 1;
    ymin = 0;
    ymax = 1;
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

  auto X = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr); };
  auto Y = [&](double v) { return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb); };

  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::string s;
  char buf[256];
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
       "viewBox=\"0 0 640 420\">\n";
  s += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", ml,
                H - mb, W - mr, H - mb);
  s += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", ml, mt,
                ml, H - mb);
  s += buf;
  s += "<text x=\"320\" y=\"410\" text-anchor=\"middle\" font-size=\"14\">t / d</text>\n";
  s += "<text x=\"16\" y=\"210\" text-anchor=\"middle\" font-size=\"14\" "
       "transform=\"rotate(-90 16 210)\">log10 E/(d t)</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4.0;
    const double yv = ymin + k * (ymax - ymin) / 4.0;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\" font-size=\"11\">%s</text>\n",
                  X(xv), H - mb + 16, fmt("%.3g", xv).c_str());
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" text-anchor=\"end\" font-size=\"11\">%s</text>\n",
                  ml - 6, Y(yv) + 4, fmt("%.3g", yv).c_str());
    s += buf;
  }
  int ci = 0;
  for (auto& [Q, pts] : byQ) {
    const char* col = colors[ci % 5];
    std::string poly;
    for (const SweepPoint* p : pts) {
      const double y = std::log10(p->E_min / (d * p->t_over_d * d));
      poly += fmt("%.2f", X(p->t_over_d)) + "," + fmt("%.2f", Y(y)) + " ";
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(col) + "\" stroke-width=\"1.5\" points=\"" +
         poly + "\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" fill=\"%s\">Q = %s</text>\n",
                  W - mr - 120.0, mt + 18.0 * (ci + 1), col, fmt("%.3g", Q).c_str());
    s += buf;
    ++ci;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace wallscale
