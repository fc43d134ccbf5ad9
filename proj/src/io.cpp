#include "entpow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "entpow/errors.hpp"

namespace entpow {

namespace {

void append_real(std::string& out, double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void append_meta(std::string& out, const std::string& key, const std::string& value) {
  out += "# ";
  out += key;
  out += ": ";
  out += value;
  out += '\n';
}

std::string real_string(double x) {
  std::string s;
  append_real(s, x);
  return s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string histogram_csv(const Histogram& h) {
  std::string out;
  const auto& m = h.meta;
  append_meta(out, "experiment", m.experiment);
  append_meta(out, "label", m.label);
  append_meta(out, "seed", std::to_string(m.seed));
  append_meta(out, "samples", std::to_string(h.total()));
  const auto gate = m.params.find("gate");
  append_meta(out, "gate", gate == m.params.end() ? "none" : gate->second);
  append_meta(out, "bins", std::to_string(h.n_bins()));
  append_meta(out, "lo", real_string(h.lo()));
  append_meta(out, "hi", real_string(h.hi()));
  for (const auto& [k, v] : m.params) {
    if (k == "gate" || k == "bins") continue;
    append_meta(out, k, v);
  }
  out += "bin_center,density\n";
  for (std::size_t i = 0; i < h.n_bins(); ++i) {
    append_real(out, h.bin_center(i));
    out += ',';
    append_real(out, h.density(i));
    out += '\n';
  }
  return out;
}

void write_csv(const Histogram& h, const std::filesystem::path& path) { write_text(path, histogram_csv(h)); }

void write_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  write_csv(report.histogram(), path);
}

const std::string& CsvHistogram::get(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  throw Error("histogram CSV: missing metadata key '" + key + "'");
}

CsvHistogram parse_histogram_csv(const std::string& text) {
  CsvHistogram out;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_seen && line.starts_with("# ")) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw Error("histogram CSV: malformed metadata line '" + line + "'");
      out.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      continue;
    }
    if (!header_seen) {
      if (line != "bin_center,density") throw Error("histogram CSV: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error("histogram CSV: malformed row '" + line + "'");
    try {
      out.bin_centers.push_back(std::stod(line.substr(0, comma)));
      out.densities.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error("histogram CSV: malformed row '" + line + "'");
    }
  }
  if (!header_seen) throw Error("histogram CSV: missing header");
  return out;
}

CsvHistogram read_histogram_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_histogram_csv(ss.str());
}

std::filesystem::path curve_path(const std::filesystem::path& prefix, const std::string& label, bool single) {
  std::filesystem::path p = prefix;
  p += single ? std::string(".csv") : "_" + label + ".csv";
  return p;
}

}  // namespace entpow
