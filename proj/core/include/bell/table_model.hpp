#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bell/model.hpp"

namespace bell {

// A discrete weighted-lambda model in its file form. The file format is
// TOML-style key/value text:
//
//   wing1_settings = ["up", "down"]   # labels, or polarizer angles in degrees
//   wing2_settings = ["up", "down"]
//   efficiency = 1                    # optional, default 1
//
//   [[lambdas]]
//   weight = 1
//   p1 = [0.5, 0.5]                   # one entry per wing1 setting
//   p2 = [0.5, 0.5]                   # one entry per wing2 setting
//   joint = [[0.5, 0], [0, 0.5]]      # optional [wing1][wing2]; omitted = p1*p2
//
// Angles are degrees in files and radians internally.
struct TableModel {
  struct Row {
    double weight = 0.0;
    std::vector<double> p1;
    std::vector<double> p2;
    std::optional<std::vector<std::vector<double>>> joint;
  };

  std::vector<Setting> wing1_settings;
  std::vector<Setting> wing2_settings;
  double efficiency = 1.0;
  std::vector<Row> rows;

  // Throws ParseError with line information on malformed input.
  static TableModel parse(std::string_view text, std::string_view origin = "<input>");
  static TableModel from_file(const std::filesystem::path& path);

  // Full-precision text that parses back to bit-identical probabilities.
  std::string serialize() const;

  // Validates every invariant (weights, ranges, Frechet coherence, shapes)
  // and builds the executable model. Throws the named ValidationError
  // subclasses, each identifying the lambda row and settings involved.
  Model to_model() const;
};

Model load_model(const std::filesystem::path& path);

}  // namespace bell
