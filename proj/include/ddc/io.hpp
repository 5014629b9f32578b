#pragma once

// DDC files: an optional header `# ddc n=<N>`, then one word per line in
// canonical text form. Other lines starting with '#' and blank lines are
// ignored.

#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "ddc/check.hpp"

namespace ddc {

/// `rank` overrides the header; without either, the rank is the largest
/// generator index that appears (at least 1).
DdcSet read_ddc(std::istream& in, std::optional<int> rank = std::nullopt);
DdcSet read_ddc_file(const std::string& path, std::optional<int> rank = std::nullopt);

void write_ddc(std::ostream& out, const DdcSet& set);
void write_ddc_file(const std::string& path, const DdcSet& set);

}  // namespace ddc
