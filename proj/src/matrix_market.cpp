#include "logdet/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace logdet {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (stream >> field) {
        fields.push_back(field);
    }
    return fields;
}

Index parse_index(const std::string& field, std::size_t line_no, const char* what) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + field + "'", line_no);
    }
    return static_cast<Index>(v);
}

double parse_value(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("invalid value '" + field + "'", line_no);
    }
    return v;
}

void append_shortest(std::string& out, double v) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    out.append(buffer, ptr);
}

}  // namespace

SparseSpdMatrix read_matrix_market(std::istream& source) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(source, line)) {
        throw ParseError("empty stream, expected a MatrixMarket header", 1);
    }
    ++line_no;
    auto header = split_fields(line);
    if (header.size() < 5 || lowercase(header[0]) != "%%matrixmarket") {
        throw ParseError("expected '%%MatrixMarket matrix coordinate real symmetric'", line_no);
    }
    const std::string object = lowercase(header[1]);
    const std::string format = lowercase(header[2]);
    const std::string field = lowercase(header[3]);
    const std::string symmetry = lowercase(header[4]);
    if (object != "matrix" || format != "coordinate") {
        throw UnsupportedFormatError("only 'matrix coordinate' streams are supported");
    }
    if (field != "real" && field != "integer") {
        throw UnsupportedFormatError("unsupported field type '" + header[3] + "'");
    }
    if (symmetry != "symmetric" && symmetry != "general") {
        throw UnsupportedFormatError("unsupported symmetry '" + header[4] + "'");
    }
    const bool symmetric_storage = symmetry == "symmetric";

    // Size line: first non-comment, non-blank line.
    Index rows = 0, cols = 0, declared = 0;
    for (;;) {
        if (!std::getline(source, line)) {
            throw ParseError("missing size line", line_no);
        }
        ++line_no;
        if (line.empty() || line[0] == '%') {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError("size line must read 'rows cols nnz'", line_no);
        }
        rows = parse_index(fields[0], line_no, "row count");
        cols = parse_index(fields[1], line_no, "column count");
        declared = parse_index(fields[2], line_no, "entry count");
        break;
    }
    if (rows != cols) {
        throw ParseError("matrix must be square, got " + std::to_string(rows) + "x" +
                         std::to_string(cols), line_no);
    }
    if (rows == 0) {
        throw ParseError("matrix order must be at least 1", line_no);
    }

    std::vector<Triplet> triplets;
    triplets.reserve(symmetric_storage ? 2 * declared : declared);
    Index seen = 0;
    while (std::getline(source, line)) {
        ++line_no;
        if (line.empty() || line[0] == '%') {
            continue;
        }
        auto fields = split_fields(line);
        if (fields.empty()) {
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError("entry line must read 'i j value'", line_no);
        }
        const Index i = parse_index(fields[0], line_no, "row index");
        const Index j = parse_index(fields[1], line_no, "column index");
        const double v = parse_value(fields[2], line_no);
        if (i < 1 || j < 1 || i > rows || j > cols) {
            throw ParseError("entry indices outside the declared size", line_no);
        }
        ++seen;
        if (seen > declared) {
            throw ParseError("more entries than declared", line_no);
        }
        if (symmetric_storage) {
            if (j > i) {
                throw ParseError("symmetric storage must hold the lower triangle only",
                                 line_no);
            }
            triplets.push_back({i - 1, j - 1, v});
            if (i != j) {
                triplets.push_back({j - 1, i - 1, v});
            }
        } else {
            triplets.push_back({i - 1, j - 1, v});
        }
    }
    if (seen != declared) {
        throw ParseError("declared " + std::to_string(declared) + " entries, found " +
                         std::to_string(seen), line_no);
    }
    return SparseSpdMatrix::from_triplets(rows, std::move(triplets));
}

SparseSpdMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_matrix_market(in);
}

void write_matrix_market(const SparseSpdMatrix& a, std::ostream& sink) {
    const Index n = a.order();
    if (n == 0) {
        throw DomainError("refusing to write an empty matrix");
    }

    Index lower_count = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j : a.row_cols(i)) {
            lower_count += j <= i;
        }
    }

    std::string out;
    out.reserve(64 + lower_count * 24);
    out += "%%MatrixMarket matrix coordinate real symmetric\n";
    out += std::to_string(n);
    out += ' ';
    out += std::to_string(n);
    out += ' ';
    out += std::to_string(lower_count);
    out += '\n';
    for (Index i = 0; i < n; ++i) {
        auto cols = a.row_cols(i);
        auto vals = a.row_values(i);
        for (std::size_t k = 0; k < cols.size() && cols[k] <= i; ++k) {
            out += std::to_string(i + 1);
            out += ' ';
            out += std::to_string(cols[k] + 1);
            out += ' ';
            append_shortest(out, vals[k]);
            out += '\n';
        }
    }
    sink << out;
    if (!sink) {
        throw SinkError("failed writing the matrix stream");
    }
}

void write_matrix_market_file(const SparseSpdMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw SinkError("cannot open '" + path + "' for writing");
    }
    write_matrix_market(a, out);
}

}  // namespace logdet
