#include "fdps/oeis.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdps {

namespace {

[[noreturn]] void fail_at(long line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

long parse_index(const std::string& tok, long line_no) {
    try {
        std::size_t used = 0;
        long n = std::stol(tok, &used);
        if (used != tok.size()) fail_at(line_no, "malformed index '" + tok + "'");
        return n;
    } catch (const std::invalid_argument&) {
        fail_at(line_no, "malformed index '" + tok + "'");
    } catch (const std::out_of_range&) {
        fail_at(line_no, "index out of range '" + tok + "'");
    }
}

Rational parse_value(const std::string& tok, long line_no) {
    try {
        return rational_from_string(tok);
    } catch (const std::exception& e) {
        fail_at(line_no, std::string("malformed value '") + tok + "': " + e.what());
    }
}

}  // namespace

std::vector<SequenceEntry> parse_sequence_stream(std::istream& in) {
    std::vector<SequenceEntry> out;
    std::string line;
    long line_no = 0;
    int columns = 0;  // 0 = undecided, 1 = plain values, 2 = "n a(n)"
    long plain_index = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) {
            if (tok.front() == '#') break;  // comment swallows the rest of the line
            tokens.push_back(tok);
        }
        if (tokens.empty()) continue;
        if (tokens.size() > 2) fail_at(line_no, "expected 'value' or 'n value'");
        int cols = static_cast<int>(tokens.size());
        if (columns == 0) columns = cols;
        if (cols != columns)
            fail_at(line_no, "mixed one-column and two-column sequence layouts");

        if (columns == 1) {
            out.push_back(SequenceEntry{plain_index++, parse_value(tokens[0], line_no)});
        } else {
            out.push_back(SequenceEntry{parse_index(tokens[0], line_no),
                                        parse_value(tokens[1], line_no)});
        }
    }
    if (out.empty()) throw std::runtime_error("line 1: empty sequence input");
    return out;
}

std::vector<SequenceEntry> parse_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return parse_sequence_stream(in);
}

std::vector<Rational> sequence_to_coefficients(const std::vector<SequenceEntry>& entries,
                                               long offset) {
    if (entries.empty()) throw std::invalid_argument("sequence_to_coefficients: no entries");
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].index != entries[i - 1].index + 1)
            throw std::invalid_argument(
                "sequence_to_coefficients: indices must be contiguous and ascending");
    long first = entries.front().index + offset;
    if (first < 0)
        throw std::invalid_argument(
            "sequence_to_coefficients: offset maps entries to negative exponents");
    std::vector<Rational> coeffs(static_cast<std::size_t>(first + static_cast<long>(entries.size())));
    for (std::size_t i = 0; i < entries.size(); ++i)
        coeffs[static_cast<std::size_t>(first) + i] = entries[i].value;
    return coeffs;
}

}  // namespace fdps
