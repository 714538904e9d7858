#include "hlp/config.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace hlp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::ParseError, (line > 0 ? "line " + std::to_string(line) + ": " : "") + what);
}

struct Entry {
  std::string value;
  int line = 0;
};

double to_double(const Entry& e, const std::string& key) {
  const std::string v = trim(e.value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    parse_fail(e.line, key + ": expected a number, got '" + v + "'");
  }
  if (used != v.size()) parse_fail(e.line, key + ": expected a number, got '" + v + "'");
  return out;
}

long to_long(const Entry& e, const std::string& key) {
  const std::string v = trim(e.value);
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) parse_fail(e.line, key + ": expected an integer, got '" + v + "'");
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

template <class T>
std::string join(const std::vector<T>& xs, int offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_same_v<T, int>) {
      out += std::to_string(xs[i] + offset);
    } else {
      out += num(xs[i]);
    }
  }
  return out;
}

const std::set<std::string>& fixed_keys() {
  static const std::set<std::string> keys{"group.kind", "group.m",   "experiment.kind", "grid.min",
                                          "grid.max",   "grid.step", "strip.E",         "strip.A",
                                          "strip.B",    "box.mode",  "params.qhat",     "params.tauhat",
                                          "out.path",   "threads"};
  return keys;
}

// z.<i>.x or z.<i>.y; returns the index or -1.
int point_key(const std::string& key, char& axis) {
  if (key.size() < 5 || key.rfind("z.", 0) != 0) return -1;
  const auto dot = key.find('.', 2);
  if (dot == std::string::npos || dot + 2 != key.size()) return -1;
  axis = key[dot + 1];
  if (axis != 'x' && axis != 'y') return -1;
  int idx = 0;
  const auto [ptr, ec] = std::from_chars(key.data() + 2, key.data() + dot, idx);
  if (ec != std::errc{} || ptr != key.data() + dot || idx < 0 || idx >= kMaxDegree) return -1;
  return idx;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, Entry> entries;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(line_no, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    char axis = 0;
    if (fixed_keys().count(key) == 0 && point_key(key, axis) < 0) parse_fail(line_no, "unknown key '" + key + "'");
    if (entries.count(key) != 0) parse_fail(line_no, "duplicate key '" + key + "'");
    entries[key] = {trim(line.substr(eq + 1)), line_no};
  }

  auto has = [&](const std::string& k) { return entries.count(k) != 0; };
  auto need = [&](const std::string& k) -> const Entry& {
    if (!has(k)) parse_fail(0, "missing required key '" + k + "'");
    return entries.at(k);
  };

  ExperimentConfig cfg;
  const Entry& kind = need("group.kind");
  if (kind.value == "modular") {
    cfg.group = GroupKind::Modular;
    if (has("group.m")) parse_fail(entries["group.m"].line, "group.m is only valid for group.kind=hilbert");
  } else if (kind.value == "hilbert") {
    cfg.group = GroupKind::Hilbert;
    cfg.m = to_long(need("group.m"), "group.m");
  } else {
    parse_fail(kind.line, "group.kind must be modular or hilbert");
  }
  const std::size_t d = cfg.group == GroupKind::Modular ? 1 : 2;

  cfg.z.assign(d, Point{});
  for (const auto& [key, entry] : entries) {
    char axis = 0;
    const int idx = point_key(key, axis);
    if (idx >= static_cast<int>(d)) parse_fail(entry.line, key + ": group has only " + std::to_string(d) + " coordinates");
  }
  for (std::size_t j = 0; j < d; ++j) {
    const std::string p = "z." + std::to_string(j) + ".";
    cfg.z[j].x = to_double(need(p + "x"), p + "x");
    cfg.z[j].y = to_double(need(p + "y"), p + "y");
  }

  if (has("experiment.kind")) {
    const Entry& e = entries["experiment.kind"];
    if (e.value == "hypercube") cfg.kind = ExperimentKind::Hypercube;
    else if (e.value == "box") cfg.kind = ExperimentKind::Box;
    else if (e.value == "strip") cfg.kind = ExperimentKind::Strip;
    else if (e.value == "transform-suite") cfg.kind = ExperimentKind::TransformSuite;
    else parse_fail(e.line, "experiment.kind must be hypercube, box, strip or transform-suite");
  }
  if (cfg.kind != ExperimentKind::TransformSuite) {
    cfg.grid_min = to_double(need("grid.min"), "grid.min");
    cfg.grid_max = to_double(need("grid.max"), "grid.max");
    cfg.grid_step = to_double(need("grid.step"), "grid.step");
  }
  if (cfg.kind == ExperimentKind::Strip) {
    const Entry& e = need("strip.E");
    for (const auto& item : split(e.value)) {
      const long j = to_long({item, e.line}, "strip.E");
      if (j < 1 || j > static_cast<long>(d)) parse_fail(e.line, "strip.E entries must lie in 1.." + std::to_string(d));
      cfg.strip_E.push_back(static_cast<int>(j - 1));
    }
    const Entry& a = need("strip.A");
    for (const auto& item : split(a.value)) cfg.strip_A.push_back(to_double({item, a.line}, "strip.A"));
    const Entry& b = need("strip.B");
    for (const auto& item : split(b.value)) cfg.strip_B.push_back(to_double({item, b.line}, "strip.B"));
    if (cfg.strip_A.size() != cfg.strip_E.size() || cfg.strip_B.size() != cfg.strip_E.size())
      parse_fail(e.line, "strip.A and strip.B need one entry per element of strip.E");
  } else {
    for (const char* k : {"strip.E", "strip.A", "strip.B"})
      if (has(k)) parse_fail(entries[k].line, std::string(k) + " is only valid for experiment.kind=strip");
  }
  if (has("box.mode")) {
    const Entry& e = entries["box.mode"];
    if (e.value == "zero") cfg.box_mode = BoxMode::Zero;
    else if (e.value == "half") cfg.box_mode = BoxMode::Half;
    else parse_fail(e.line, "box.mode must be zero or half");
  }
  if (has("params.qhat")) cfg.qhat = to_double(entries["params.qhat"], "params.qhat");
  if (has("params.tauhat")) cfg.tauhat = to_double(entries["params.tauhat"], "params.tauhat");
  if (has("out.path")) cfg.out_path = entries["out.path"].value;
  if (has("threads")) cfg.threads = static_cast<int>(to_long(entries["threads"], "threads"));
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "group.kind=" << (cfg.group == GroupKind::Modular ? "modular" : "hilbert") << "\n";
  if (cfg.group == GroupKind::Hilbert) out << "group.m=" << cfg.m << "\n";
  for (std::size_t j = 0; j < cfg.z.size(); ++j) {
    out << "z." << j << ".x=" << num(cfg.z[j].x) << "\n";
    out << "z." << j << ".y=" << num(cfg.z[j].y) << "\n";
  }
  static const char* kinds[] = {"hypercube", "box", "strip", "transform-suite"};
  out << "experiment.kind=" << kinds[static_cast<int>(cfg.kind)] << "\n";
  if (cfg.kind != ExperimentKind::TransformSuite) {
    out << "grid.min=" << num(cfg.grid_min) << "\n";
    out << "grid.max=" << num(cfg.grid_max) << "\n";
    out << "grid.step=" << num(cfg.grid_step) << "\n";
  }
  if (cfg.kind == ExperimentKind::Strip) {
    out << "strip.E=" << join(cfg.strip_E, 1) << "\n";
    out << "strip.A=" << join(cfg.strip_A) << "\n";
    out << "strip.B=" << join(cfg.strip_B) << "\n";
  }
  out << "box.mode=" << (cfg.box_mode == BoxMode::Zero ? "zero" : "half") << "\n";
  if (cfg.qhat) out << "params.qhat=" << num(*cfg.qhat) << "\n";
  out << "params.tauhat=" << num(cfg.tauhat) << "\n";
  if (!cfg.out_path.empty()) out << "out.path=" << cfg.out_path << "\n";
  out << "threads=" << cfg.threads << "\n";
  return out.str();
}

std::string csv_row(const CountReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << r.T << ',' << r.count << ',' << r.main_term << ',' << r.ratio << ',' << r.excess << ',' << r.n_of_z << ','
      << r.near_boundary << ',';
  out.precision(6);
  out << r.wall_s;
  return out.str();
}

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
  if (!out_) throw Error(ErrorCode::IoError, "cannot write " + path);
  out_ << kCsvHeader << '\n';
  out_.flush();
}

void CsvWriter::write(const CountReport& r) {
  out_ << csv_row(r) << '\n';
  out_.flush();
  if (!out_) throw Error(ErrorCode::IoError, "write failed");
}

void write_csv(const std::vector<CountReport>& reports, const std::string& path) {
  CsvWriter w(path);
  for (const auto& r : reports) w.write(r);
}

}  // namespace hlp
