#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "superedge/graph.hpp"

namespace superedge {

/// Malformed graph6 record; byte_offset points at the offending byte.
struct g6_parse_error : std::runtime_error {
    g6_parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

namespace detail {

constexpr int kG6Low = 63;    // '?'
constexpr int kG6High = 126;  // '~'

inline std::size_t g6_body_chars(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace detail

/// Record length for the short (n <= 62) header form.
inline std::size_t graph6_record_length(int n) {
    return 1 + detail::g6_body_chars(n);
}

/// Canonical graph6 line for the labeled adjacency of g (no trailing newline).
///
/// Header: one char 63+n for n <= 62, '~' + three chars for larger n.
/// Body: upper-triangle bits in column-major order x(0,1),x(0,2),x(1,2),...,
/// packed big-endian six to a char, zero-padded, each char offset by 63.
inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(detail::kG6Low + n));
    } else {
        out.push_back(static_cast<char>(detail::kG6High));
        out.push_back(static_cast<char>(detail::kG6Low + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(detail::kG6Low + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(detail::kG6Low + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(detail::kG6Low + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(detail::kG6Low + (acc << (6 - nbits))));
    return out;
}

/// Strict decoder: rejects out-of-range characters, wrong record length,
/// nonzero padding bits, and non-canonical headers.
inline Graph decode_graph6(std::string_view line) {
    if (line.empty()) throw g6_parse_error("empty record", 0);
    std::size_t pos = 0;
    auto char_value = [&](std::size_t at) {
        const unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < detail::kG6Low || c > detail::kG6High)
            throw g6_parse_error("character out of range 63..126", at);
        return static_cast<int>(c) - detail::kG6Low;
    };

    int n;
    if (static_cast<unsigned char>(line[0]) != detail::kG6High) {
        n = char_value(0);
        pos = 1;
    } else {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == detail::kG6High)
            throw g6_parse_error("8-byte size header not supported", 1);
        if (line.size() < 4) throw g6_parse_error("truncated extended size header", line.size());
        n = (char_value(1) << 12) | (char_value(2) << 6) | char_value(3);
        if (n <= 62) throw g6_parse_error("non-canonical extended header for small order", 1);
        pos = 4;
    }
    if (n == 0) throw g6_parse_error("order zero not supported", 0);
    if (n > kMaxVertices)
        throw g6_parse_error("order " + std::to_string(n) + " exceeds the vertex bound " +
                                 std::to_string(kMaxVertices),
                             0);

    const std::size_t expect = pos + detail::g6_body_chars(n);
    if (line.size() < expect) throw g6_parse_error("truncated adjacency bits", line.size());
    if (line.size() > expect) throw g6_parse_error("trailing characters after record", expect);

    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    int col = 1, row = 0;
    const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bit_index = 0;
    for (std::size_t at = pos; at < line.size(); ++at) {
        const int v = char_value(at);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const int bit = (v >> b) & 1;
            if (bit_index >= total_bits) {
                if (bit != 0) throw g6_parse_error("nonzero padding bit", at);
                continue;
            }
            if (bit) {
                rows[row] |= std::uint64_t{1} << col;
                rows[col] |= std::uint64_t{1} << row;
            }
            if (++row == col) {
                ++col;
                row = 0;
            }
        }
    }
    Graph g(n);
    g.assign_rows(n, rows.data());
    return g;
}

/// Record failure wrapped with its 1-based physical line number.
struct g6_stream_error : std::runtime_error {
    g6_stream_error(std::size_t record, const std::string& what)
        : std::runtime_error("record " + std::to_string(record) + ": " + what), record_index(record) {}
    std::size_t record_index;
};

/// Line-by-line graph6 reader. Blank lines and ">" format banners are
/// skipped; indices count physical lines so errors map back to the file.
class Graph6Reader {
public:
    struct Record {
        std::size_t index = 0;  // 1-based physical line number
        Graph graph{1};
    };

    explicit Graph6Reader(std::istream& in, bool skip_bad_records = false)
        : in_(in), skip_bad_(skip_bad_records) {}

    std::optional<Record> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '>') continue;
            try {
                return Record{line_no_, decode_graph6(line)};
            } catch (const g6_parse_error& e) {
                if (!skip_bad_) throw g6_stream_error(line_no_, e.what());
                ++skipped_;
                skip_log_.push_back("record " + std::to_string(line_no_) + ": " + e.what());
            }
        }
        return std::nullopt;
    }

    std::size_t skipped() const { return skipped_; }
    const std::vector<std::string>& skip_log() const { return skip_log_; }

private:
    std::istream& in_;
    bool skip_bad_;
    std::size_t line_no_ = 0;
    std::size_t skipped_ = 0;
    std::vector<std::string> skip_log_;
};

/// Decodes a whole stream eagerly; fail-fast unless skip_bad_records.
inline std::vector<Graph6Reader::Record> decode_graph6_stream(std::istream& in,
                                                              bool skip_bad_records = false) {
    Graph6Reader reader(in, skip_bad_records);
    std::vector<Graph6Reader::Record> out;
    while (auto rec = reader.next()) out.push_back(std::move(*rec));
    return out;
}

/// Edge-list text: first line "n m", then m lines "u v" with 0-based
/// endpoints. Blank lines are ignored.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_data_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            return line;
        }
        return std::nullopt;
    };
    auto parse_two = [&](const std::string& text, long long& a, long long& b) {
        std::istringstream ls(text);
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": expected two integers, got \"" + text + "\"");
    };

    auto header = next_data_line();
    if (!header) throw std::invalid_argument("edge list: missing \"n m\" header line");
    long long n, m;
    parse_two(*header, n, m);
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": vertex count out of range: " + std::to_string(n));
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");

    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        auto data = next_data_line();
        if (!data)
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        long long u, v;
        parse_two(*data, u, v);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": endpoint out of range");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line())
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": trailing content after declared edges");
    return Graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline Graph decode_graph6_line(const std::string& line) { return decode_graph6(line); }

}  // namespace superedge
