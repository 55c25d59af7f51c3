#pragma once

#include <string>
#include <vector>

#include "buzz/geometry.hpp"

namespace buzz {

/// Scalar series: one value per line, or a single whitespace/comma separated
/// line (both accepted on read; writes use one value per line). Throws
/// std::invalid_argument naming the offending token.
std::vector<double> parse_series_csv(const std::string& text);
std::string series_to_csv(const std::vector<double>& values);

/// Point cloud: one point per row, columns = coordinates, comma separated;
/// an optional non-numeric header row is skipped on read. All rows must have
/// the same width. Ids are assigned 0..n-1, snapshots left unassigned.
PointCloud parse_cloud_csv(const std::string& text);
std::string cloud_to_csv(const PointCloud& cloud);

/// Whole-file helpers; errors mention the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace buzz
