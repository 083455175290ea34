#include "hborbit/coeff_file.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace hborbit {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

// Reads the next non-empty line, which must be exactly "key = value".
std::string read_keyed(std::istream& in, const std::string& key, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3 || tokens[0] != key || tokens[1] != "=")
            throw ParseError("line " + std::to_string(line_no) + ": expected '" + key +
                             " = <value>'");
        return tokens[2];
    }
    throw ParseError("unexpected end of file while looking for '" + key + "'");
}

}  // namespace

RawCoefficientFile read_coefficient_file(std::istream& in) {
    RawCoefficientFile raw;
    int line_no = 0;

    if (read_keyed(in, "format_version", line_no) != "1")
        throw ParseError("unsupported format_version");
    raw.sigma = read_keyed(in, "sigma", line_no);
    raw.r = read_keyed(in, "r", line_no);
    raw.b = read_keyed(in, "b", line_no);
    raw.omega = read_keyed(in, "omega", line_no);

    // Optional precision tag, then the means line.
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        ++line_no;
        tokens = split_ws(line);
        if (!tokens.empty()) break;
    }
    if (tokens.size() == 3 && tokens[0] == "precision" && tokens[1] == "=") {
        raw.precision = tokens[2];
        tokens.clear();
        while (std::getline(in, line)) {
            ++line_no;
            tokens = split_ws(line);
            if (!tokens.empty()) break;
        }
    }
    if (tokens.size() != 5 || tokens[0] != "means" || tokens[1] != "=")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'means = <x10> <x20> <x30>'");
    raw.means = {tokens[2], tokens[3], tokens[4]};

    while (std::getline(in, line)) {
        ++line_no;
        tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 7)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected '<i> <c1> <s1> <c2> <s2> <c3> <s3>'");
        const int expected = static_cast<int>(raw.rows.size()) + 1;
        if (tokens[0] != std::to_string(expected))
            throw ParseError("line " + std::to_string(line_no) + ": harmonic index should be " +
                             std::to_string(expected) + ", got '" + tokens[0] + "'");
        raw.rows.push_back({tokens[1], tokens[2], tokens[3], tokens[4], tokens[5], tokens[6]});
    }
    if (raw.rows.empty())
        throw ParseError("coefficient file has no harmonic rows");
    return raw;
}

RawCoefficientFile read_coefficient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return read_coefficient_file(in);
}

}  // namespace hborbit
