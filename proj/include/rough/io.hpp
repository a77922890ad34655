#pragma once

#include <istream>
#include <string>
#include <vector>

namespace rough {

// Reads comma-separated records. Cells are taken verbatim: no quoting, no
// escaping, no trimming, so cells must not contain commas or newlines.
// A trailing newline at end of input does not produce an empty record.
std::vector<std::vector<std::string>> read_delimited(std::istream& in);

// Same, from a file path. Throws InputError when the file cannot be opened.
std::vector<std::vector<std::string>> read_delimited_file(const std::string& path);

}  // namespace rough
