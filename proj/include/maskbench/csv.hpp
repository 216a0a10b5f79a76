#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace maskbench::csv {

using Row = std::vector<std::string>;

/// Reads a comma-separated file without quoting. The first row must equal
/// `header` exactly; it is not returned. Blank lines are skipped.
std::vector<Row> read(const std::filesystem::path& path, const Row& header);

/// Writes header plus rows, '\n' line endings.
void write(const std::filesystem::path& path, const Row& header, const std::vector<Row>& rows);

/// Shortest round-trip decimal representation ("%.17g").
std::string exact(double v);

/// Fixed-point with `digits` decimals.
std::string fixed(double v, int digits);

double to_double(const std::string& s, const std::string& context);
long long to_int(const std::string& s, const std::string& context);

}  // namespace maskbench::csv
