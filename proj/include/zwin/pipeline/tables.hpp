#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zwin/hardy/window.hpp"
#include "zwin/psi/coeff_table.hpp"

namespace zwin {

struct Table1Options {
  std::string T = "7.1934200352263711248e14";
  std::string a = "0.38644";
  long K = 5;
  // Also run the boundary/peak search (minutes) and report its window.
  bool detect_window = true;
  long min_n = 3;
  unsigned threads = 1;
};

struct Table1Report {
  Window window;
  CoeffTable table;
  MeanSineCheck sine;
  // Z^(2k-1)(T +- a), k = 1..K.
  std::vector<double> derivs_plus, derivs_minus;
  std::optional<Window> detected;
  // T_M - T and Z(T_M) relative to the fixed T.
  std::optional<double> peak_offset, z_peak;
};

// Zeros of Z in the fixed window, derivatives at T +- a, coefficient table and
// e_{2K,n}.  WindowRejected when the zero count is even.
Table1Report run_table1(const Table1Options& opt = {});
nlohmann::json to_json(const Table1Report& r);

struct Table2Options {
  // Used when the zero file has no a / K header.
  double a = 0.33794;
  long K = 9;
  // Highest derivative order taken from the samples, and the stencil width.
  int max_fd_order = 3;
  int stencil = 9;
};

struct Table2Report {
  Window window;
  CoeffTable table;
  std::vector<std::string> notes;
};

// beta from ingested zero offsets; d for low orders by finite differences on
// the optional samples, the rest left missing.  IoError on bad files.
Table2Report run_table2(const std::string& zero_file, const std::optional<std::string>& sample_file,
                        const Table2Options& opt = {});
nlohmann::json to_json(const Table2Report& r);

struct DeltaSReport {
  PrecReal T{kDefaultBits};
  PrecReal a{kDefaultBits};
  std::vector<double> offsets;
  double smooth_count = 0.0;
  // (n + 1) - smooth count.
  double delta_s = 0.0;
  bool odd_n = false;
  std::optional<MeanSineCheck> sine;
};

DeltaSReport run_deltaS(const PrecReal& T, double a, unsigned threads = 1);
nlohmann::json to_json(const DeltaSReport& r);

}  // namespace zwin
