#pragma once

// Theorem sweeps over an (n, level) grid with per-cell checkpointing.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qschubert/conformal_blocks.hpp"
#include "qschubert/report.hpp"
#include "qschubert/text.hpp"

namespace qschubert {

/// Reading or writing a report or checkpoint failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

/// "4..6" or "4".
inline IntRange parse_range(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  const auto dots = s.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = detail::parse_int(s, s);
  } else {
    r.lo = detail::parse_int(std::string_view(s).substr(0, dots), s);
    r.hi = detail::parse_int(std::string_view(s).substr(dots + 2), s);
  }
  if (r.lo > r.hi) throw ParseError("empty range '" + s + "'");
  return r;
}

struct SweepConfig {
  IntRange n_range{4, 4};
  IntRange level_range{1, 1};
  int parallelism = 1;
  bool early_exit = true;
  std::string output_path;
  std::string checkpoint_path;
  std::string csv_path;
};

inline void validate(const SweepConfig& config) {
  if (config.n_range.lo < 2) throw std::invalid_argument("n must be at least 2");
  if (config.level_range.lo < 1) throw std::invalid_argument("level must be at least 1");
  if (config.n_range.lo > config.n_range.hi || config.level_range.lo > config.level_range.hi)
    throw std::invalid_argument("sweep ranges must be nonempty");
  if (config.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

namespace detail {

inline std::string cell_key(int n, int level) { return std::to_string(n) + ":" + std::to_string(level); }

inline constexpr std::string_view checkpoint_format = "qschubert-verify-checkpoint";

inline nlohmann::json load_checkpoint(const std::string& path, bool early_exit) {
  nlohmann::json fresh = {{"format", checkpoint_format}, {"version", 1}, {"early_exit", early_exit},
                          {"cells", nlohmann::json::object()}};
  if (path.empty() || !std::filesystem::exists(path)) return fresh;
  std::ifstream in(path);
  if (!in) throw IoError("cannot read checkpoint " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt checkpoint " + path + ": " + e.what());
  }
  if (!j.is_object() || j.value("format", "") != checkpoint_format || !j.contains("cells"))
    throw IoError("file " + path + " is not a verify checkpoint");
  // Cells computed with the other early-exit setting carry different bounds.
  if (j.value("early_exit", !early_exit) != early_exit) return fresh;
  return j;
}

}  // namespace detail

/// Writes `text` to `path` through a temporary file and a rename.
inline void write_file_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp);
    out << text;
    out.flush();
    if (!out) throw IoError("write to " + tmp + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

struct SweepOutcome {
  nlohmann::json report;
  bool pass = false;
  int cells_computed = 0;
  int cells_resumed = 0;
};

/// Runs verify_theorem over the grid, cell by cell in (n, level) order. With a
/// checkpoint path, every finished cell is persisted and cells already present
/// are reused, so an interrupted sweep resumes to the same final report.
inline SweepOutcome run_sweep(const SweepConfig& config, std::ostream* progress = nullptr) {
  validate(config);
  nlohmann::json checkpoint = detail::load_checkpoint(config.checkpoint_path, config.early_exit);

  SweepOutcome outcome;
  nlohmann::json cells = nlohmann::json::array();
  bool pass = true;
  for (int n = config.n_range.lo; n <= config.n_range.hi; ++n) {
    for (int level = config.level_range.lo; level <= config.level_range.hi; ++level) {
      const std::string key = detail::cell_key(n, level);
      nlohmann::json cell;
      if (checkpoint["cells"].contains(key)) {
        cell = checkpoint["cells"][key];
        ++outcome.cells_resumed;
      } else {
        cell = theorem_report_json(verify_theorem(n, level, {config.early_exit, config.parallelism}));
        ++outcome.cells_computed;
        if (!config.checkpoint_path.empty()) {
          checkpoint["cells"][key] = cell;
          write_file_atomically(config.checkpoint_path, checkpoint.dump());
        }
      }
      const bool cell_pass = cell.at("verdict") == "PASS";
      pass = pass && cell_pass;
      if (progress)
        *progress << "n=" << n << " level=" << level << " weights=" << cell.at("weights").get<std::size_t>() << ' '
                  << (cell_pass ? "PASS" : "FAIL") << '\n';
      cells.push_back(std::move(cell));
    }
  }

  outcome.pass = pass;
  outcome.report = {
      {"verdict", pass ? "PASS" : "FAIL"},
      {"early_exit", config.early_exit},
      {"n_range", {config.n_range.lo, config.n_range.hi}},
      {"level_range", {config.level_range.lo, config.level_range.hi}},
      {"cells", std::move(cells)},
  };
  if (!config.output_path.empty()) write_file_atomically(config.output_path, outcome.report.dump(2) + "\n");
  if (!config.csv_path.empty()) write_file_atomically(config.csv_path, sweep_report_csv(outcome.report));
  return outcome;
}

}  // namespace qschubert
