#include "rough/io.hpp"

#include <fstream>
#include <sstream>

#include "rough/errors.hpp"

namespace rough {

std::vector<std::vector<std::string>> read_delimited(std::istream& in) {
    std::vector<std::vector<std::string>> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        records.push_back(std::move(cells));
    }
    return records;
}

std::vector<std::vector<std::string>> read_delimited_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    return read_delimited(in);
}

}  // namespace rough
