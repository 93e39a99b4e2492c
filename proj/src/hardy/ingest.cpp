#include "zwin/hardy/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "zwin/numkernel/errors.hpp"

namespace zwin {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw IoError(source + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& tok, const std::string& source, std::size_t line) {
  double v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    fail(source, line, "not a number: '" + tok + "'");
  }
  return v;
}

// "# key=value" header lines; returns false for other comments.
bool parse_header(const std::string& line, std::string& key, std::string& value) {
  std::string body = trim(line.substr(1));
  const auto eq = body.find('=');
  if (eq == std::string::npos) return false;
  key = trim(body.substr(0, eq));
  value = trim(body.substr(eq + 1));
  return !key.empty();
}

PrecReal parse_prec(const std::string& text, Bits bits, const std::string& source, std::size_t line) {
  try {
    return PrecReal::parse(text, bits);
  } catch (const ContractError&) {
    fail(source, line, "not a number: '" + text + "'");
  }
}

}  // namespace

ZeroList parse_zero_list(const std::string& text, const std::string& source, Bits bits) {
  ZeroList zl;
  bool have_T = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string key, value;
      if (!parse_header(line, key, value)) continue;
      if (key == "T") {
        zl.T = parse_prec(value, bits, source, lineno);
        have_T = true;
      } else if (key == "a") {
        zl.a = parse_double(value, source, lineno);
      } else if (key == "K") {
        long k = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), k);
        if (ec != std::errc() || ptr != value.data() + value.size() || k < 1) {
          fail(source, lineno, "K must be a positive integer");
        }
        zl.K = k;
      }
      continue;
    }
    if (!have_T) fail(source, lineno, "missing '# T=<decimal>' header before data");
    const double x = parse_double(line, source, lineno);
    if (!zl.offsets.empty() && !(x > zl.offsets.back())) {
      fail(source, lineno, "offsets must be strictly increasing");
    }
    zl.offsets.push_back(x);
  }
  if (!have_T) fail(source, lineno, "missing '# T=<decimal>' header");
  if (zl.offsets.empty()) fail(source, lineno, "no zero offsets");
  return zl;
}

ZeroList read_zero_list(const std::string& path, Bits bits) {
  return parse_zero_list(read_file(path), path, bits);
}

SampleSet parse_samples(const std::string& text, const std::string& source) {
  SampleSet s;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string key, value;
      if (parse_header(line, key, value) && key == "T") s.T = parse_prec(value, 256, source, lineno);
      continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) fail(source, lineno, "expected two columns");
    s.points.emplace_back(parse_double(a, source, lineno), parse_double(b, source, lineno));
  }
  if (s.points.empty()) fail(source, lineno, "no samples");
  std::sort(s.points.begin(), s.points.end());
  for (std::size_t i = 1; i < s.points.size(); ++i) {
    if (s.points[i].first == s.points[i - 1].first) fail(source, 0, "duplicate abscissa");
  }
  return s;
}

SampleSet read_samples(const std::string& path) { return parse_samples(read_file(path), path); }

std::string format_zero_list(const ZeroList& zl) {
  std::ostringstream out;
  out << "# T=" << zl.T.to_string() << "\n";
  if (zl.a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *zl.a);
    out << "# a=" << buf << "\n";
  }
  if (zl.K) out << "# K=" << *zl.K << "\n";
  for (double x : zl.offsets) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << "\n";
  }
  return out.str();
}

void write_zero_list(const std::string& path, const ZeroList& zl) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot write file");
  out << format_zero_list(zl);
  if (!out) throw IoError(path + ": write failed");
}

std::vector<std::vector<double>> fornberg_weights(double x0, const std::vector<double>& xs, int m) {
  const std::size_t n = xs.size();
  if (n == 0 || m < 0) throw ContractError("fornberg_weights: empty stencil");
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n, 0.0));
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = xs[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = xs[i] - xs[j];
      if (c3 == 0.0) throw CoincidentNodesError("fornberg_weights: repeated abscissa");
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

double fd_derivative(const SampleSet& s, double x0, int order, int stencil) {
  if (order < 0 || stencil <= order) throw ContractError("fd_derivative: stencil must exceed the order");
  if (static_cast<std::size_t>(stencil) > s.points.size()) {
    throw ContractError("fd_derivative: not enough samples for the stencil");
  }
  std::vector<std::pair<double, double>> pts = s.points;
  std::stable_sort(pts.begin(), pts.end(), [x0](const auto& p, const auto& q) {
    return std::fabs(p.first - x0) < std::fabs(q.first - x0);
  });
  pts.resize(stencil);
  std::vector<double> xs;
  for (const auto& p : pts) xs.push_back(p.first);
  const auto w = fornberg_weights(x0, xs, order);
  double acc = 0.0;
  for (int i = 0; i < stencil; ++i) acc += w[order][i] * pts[i].second;
  return acc;
}

}  // namespace zwin
