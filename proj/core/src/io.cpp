#include "ndsort/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ndsort {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what)
{
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

template <typename T>
std::optional<T> parse_number(std::string_view text)
{
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return value;
}

// Reads "n=<N>" / "m=<M>" tokens out of a header comment.
void read_header(std::string_view comment, std::optional<std::size_t>& n, std::optional<std::size_t>& m)
{
    std::istringstream tokens{std::string(comment)};
    std::string token;
    while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            continue;
        }
        const auto key = token.substr(0, eq);
        const auto value = parse_number<std::size_t>(std::string_view(token).substr(eq + 1));
        if (key == "n" && value) {
            n = value;
        } else if (key == "m" && value) {
            m = value;
        }
    }
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for reading");
    }
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    }
    return out;
}

void check_written(const std::ostream& out, const std::filesystem::path& path)
{
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing " + path.string());
    }
}

} // namespace

ObjectiveMatrix parse_population(std::istream& in)
{
    std::optional<std::size_t> declared_n;
    std::optional<std::size_t> declared_m;
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t m = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            read_header(line.substr(1), declared_n, declared_m);
            continue;
        }
        std::size_t fields = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const auto cell = trim(line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                                      : comma - start));
            const auto column = static_cast<std::size_t>(cell.data() - raw.data()) + 1;
            const auto value = parse_number<double>(cell);
            if (!value) {
                parse_error(line_no, column, "'" + std::string(cell) + "' is not a number");
            }
            values.push_back(*value);
            ++fields;
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (rows == 0) {
            m = fields;
        } else if (fields != m) {
            parse_error(line_no, 1, "expected " + std::to_string(m) + " values, found " + std::to_string(fields));
        }
        ++rows;
    }
    if (in.bad()) {
        throw Error(ErrorCode::IoError, "read failure");
    }
    if (rows == 0 && declared_m) {
        m = *declared_m;
    }
    if (declared_n && *declared_n != rows) {
        throw Error(ErrorCode::ParseError,
                    "header declares n=" + std::to_string(*declared_n) + " but file has " + std::to_string(rows)
                        + " rows");
    }
    if (declared_m && rows > 0 && *declared_m != m) {
        throw Error(ErrorCode::ParseError,
                    "header declares m=" + std::to_string(*declared_m) + " but rows have " + std::to_string(m)
                        + " values");
    }
    if (rows == 0 && m == 0) {
        // an empty file carries no dimension information
        m = 1;
    }
    ObjectiveMatrix matrix(rows, m, std::move(values));
    require_valid(matrix);
    return matrix;
}

ObjectiveMatrix parse_population(const std::filesystem::path& path)
{
    auto in = open_in(path);
    try {
        return parse_population(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

void write_population(std::ostream& out, const ObjectiveMatrix& matrix)
{
    out << "# n=" << matrix.rows() << " m=" << matrix.objectives() << '\n';
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        const auto row = matrix.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                out << ',';
            }
            out << row[k];
        }
        out << '\n';
    }
}

void write_population(const std::filesystem::path& path, const ObjectiveMatrix& matrix)
{
    auto out = open_out(path);
    write_population(out, matrix);
    check_written(out, path);
}

void write_ranking(std::ostream& out, const RankAssignment& ranks)
{
    out << "id,rank\n";
    for (SolutionId id = 0; id < ranks.size(); ++id) {
        out << id << ',' << ranks[id] << '\n';
    }
}

void write_ranking(const std::filesystem::path& path, const RankAssignment& ranks)
{
    auto out = open_out(path);
    write_ranking(out, ranks);
    check_written(out, path);
}

RankAssignment parse_ranking(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    if (!std::getline(in, raw) || trim(raw) != "id,rank") {
        parse_error(1, 1, "missing 'id,rank' header");
    }
    ++line_no;
    std::vector<std::uint32_t> ranks;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            parse_error(line_no, 1, "expected 'id,rank'");
        }
        const auto id = parse_number<std::uint32_t>(trim(line.substr(0, comma)));
        const auto rank = parse_number<std::uint32_t>(trim(line.substr(comma + 1)));
        if (!id || !rank) {
            parse_error(line_no, 1, "malformed row '" + std::string(line) + "'");
        }
        if (*id != ranks.size()) {
            parse_error(line_no, 1, "ids must be consecutive from 0");
        }
        ranks.push_back(*rank);
    }
    return RankAssignment(std::move(ranks));
}

RankAssignment parse_ranking(const std::filesystem::path& path)
{
    auto in = open_in(path);
    return parse_ranking(in);
}

} // namespace ndsort
