#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "amat/errors.hpp"
#include "amat/matrix.hpp"

namespace amat {

using AnyMatrix = std::variant<MatR, MatC, MatH>;

struct NamedMatrix {
    std::string name;
    AnyMatrix mat;
};

/// Contents of one .amat file: a named list of same-shaped matrices over
/// one field.
struct AmatFile {
    Field field = Field::Real;
    int rows = 0;
    int cols = 0;
    std::vector<NamedMatrix> matrices;
};

/// Shortest decimal that round-trips a double (17 significant digits).
inline std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline int entry_width(Field f) {
    switch (f) {
        case Field::Real: return 1;
        case Field::Complex: return 2;
        case Field::Quaternion: return 4;
    }
    return 0;
}

struct LineReader {
    std::istream& in;
    int line_number = 0;

    // Next content line, with blank lines and '#' comments skipped.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_number;
            const auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = raw.find_last_not_of(" \t\r");
            out = raw.substr(a, b - a + 1);
            return true;
        }
        return false;
    }
};

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

inline double parse_double(const std::string& tok, int line) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') throw ParseError("bad number '" + tok + "'", line);
    return v;
}

template <class S>
AnyMatrix read_entries(LineReader& r, const std::string& /*name*/, int rows, int cols) {
    Matrix<S> m(rows, cols);
    const int width = ScalarTraits<S>::reals_per_entry;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            std::string line;
            if (!r.next(line)) throw ParseError("unexpected end of file inside a matrix",
                                                r.line_number);
            const auto toks = split_ws(line);
            if (static_cast<int>(toks.size()) != width)
                throw ParseError("entry needs " + std::to_string(width) + " numbers, got " +
                                 std::to_string(toks.size()), r.line_number);
            double c[4] = {0, 0, 0, 0};
            for (size_t t = 0; t < toks.size(); ++t) c[t] = parse_double(toks[t], r.line_number);
            if constexpr (field_of<S> == Field::Real) {
                m(i, j) = c[0];
            } else if constexpr (field_of<S> == Field::Complex) {
                m(i, j) = Cplx{c[0], c[1]};
            } else {
                m(i, j) = Quat{c[0], c[1], c[2], c[3]};
            }
        }
    }
    return m;
}

inline void write_entry(std::ostream& os, double x) { os << format_full(x); }
inline void write_entry(std::ostream& os, const Cplx& x) {
    os << format_full(x.real()) << ' ' << format_full(x.imag());
}
inline void write_entry(std::ostream& os, const Quat& x) {
    os << format_full(x.a) << ' ' << format_full(x.b) << ' ' << format_full(x.c) << ' '
       << format_full(x.d);
}

}  // namespace detail

/// Parses the text matrix format:
///   AMAT v1 <R|C|H> <rows> <cols> <num_matrices>
/// then per matrix a `name <identifier>` line followed by rows*cols entry
/// lines (row major, one entry per line, 1/2/4 decimals). Blank lines and
/// '#' comments are ignored anywhere.
inline AmatFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    detail::LineReader r{in};

    std::string line;
    if (!r.next(line)) throw ParseError("missing header", 1);
    const auto head = detail::split_ws(line);
    if (head.size() != 6 || head[0] != "AMAT" || head[1] != "v1")
        throw ParseError("header must be 'AMAT v1 <R|C|H> <rows> <cols> <count>'", r.line_number);

    AmatFile file;
    if (head[2] == "R")
        file.field = Field::Real;
    else if (head[2] == "C")
        file.field = Field::Complex;
    else if (head[2] == "H")
        file.field = Field::Quaternion;
    else
        throw ParseError("unknown field tag '" + head[2] + "'", r.line_number);

    try {
        file.rows = std::stoi(head[3]);
        file.cols = std::stoi(head[4]);
    } catch (const std::exception&) {
        throw ParseError("bad matrix shape in header", r.line_number);
    }
    int count = 0;
    try {
        count = std::stoi(head[5]);
    } catch (const std::exception&) {
        throw ParseError("bad matrix count in header", r.line_number);
    }
    if (file.rows <= 0 || file.cols <= 0 || count < 0)
        throw ParseError("non-positive shape in header", r.line_number);

    for (int k = 0; k < count; ++k) {
        if (!r.next(line)) throw ParseError("expected 'name <identifier>'", r.line_number + 1);
        const auto toks = detail::split_ws(line);
        if (toks.size() != 2 || toks[0] != "name")
            throw ParseError("expected 'name <identifier>'", r.line_number);
        NamedMatrix nm;
        nm.name = toks[1];
        switch (file.field) {
            case Field::Real:
                nm.mat = detail::read_entries<double>(r, nm.name, file.rows, file.cols);
                break;
            case Field::Complex:
                nm.mat = detail::read_entries<Cplx>(r, nm.name, file.rows, file.cols);
                break;
            case Field::Quaternion:
                nm.mat = detail::read_entries<Quat>(r, nm.name, file.rows, file.cols);
                break;
        }
        file.matrices.push_back(std::move(nm));
    }
    if (r.next(line)) throw ParseError("trailing content after the last matrix", r.line_number);
    return file;
}

/// Writes the format read by read_matrix_file, full double precision.
inline void write_matrix_file(const std::string& path, const AmatFile& file) {
    std::ostringstream os;
    os << "AMAT v1 " << field_name(file.field) << ' ' << file.rows << ' ' << file.cols << ' '
       << file.matrices.size() << '\n';
    for (const auto& nm : file.matrices) {
        os << "name " << nm.name << '\n';
        std::visit(
            [&](const auto& m) {
                using S = std::decay_t<decltype(m(0, 0))>;
                if (field_of<S> != file.field)
                    throw IoError("matrix '" + nm.name + "' does not match the header field");
                if (m.rows() != file.rows || m.cols() != file.cols)
                    throw IoError("matrix '" + nm.name + "' does not match the header shape");
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) {
                        detail::write_entry(os, m(i, j));
                        os << '\n';
                    }
            },
            nm.mat);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << os.str();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace amat
