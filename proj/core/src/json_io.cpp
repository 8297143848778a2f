#include "symtoep/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symtoep {

namespace {

using nlohmann::json;

std::string complex_pair(Complex z) {
    return "[" + format_double(z.real()) + "," + format_double(z.imag()) + "]";
}

Eigen::MatrixXcd read_entries(const json& j, Eigen::Index nrows, Eigen::Index ncols) {
    const auto& arr = j.at("entries");
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != nrows * ncols)
        throw std::invalid_argument("entry count does not match window");
    Eigen::MatrixXcd m(nrows, ncols);
    Eigen::Index k = 0;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix entry must be a [re,im] pair");
        m(k / ncols, k % ncols) =
            Complex{e.at(0).get<double>(), e.at(1).get<double>()};
        ++k;
    }
    return m;
}

IndexWindow read_window(const json& j) {
    IndexWindow w{j.at("b_min").get<int>(), j.at("b_max").get<int>(),
                  j.at("a_max").get<int>()};
    if (!w.well_formed()) throw std::invalid_argument("malformed window descriptor");
    return w;
}

ParsedMatrix parse_matrix_json(const json& j) {
    ParsedMatrix out;
    out.label = j.value("label", "");
    if (j.contains("dim")) {
        const int dim = j.at("dim").get<int>();
        if (dim < 0) throw std::invalid_argument("negative matrix dimension");
        out.entries = read_entries(j, dim, dim);
        return out;
    }
    const IndexWindow rows = read_window(j.at("rows"));
    const IndexWindow cols = read_window(j.at("cols"));
    out.rows = rows;
    out.cols = cols;
    out.entries = read_entries(j, static_cast<Eigen::Index>(rows.size()),
                               static_cast<Eigen::Index>(cols.size()));
    return out;
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) throw std::runtime_error("non-finite value in JSON output");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string to_json(const IndexWindow& w) {
    return "{\"b_min\":" + std::to_string(w.b_min) +
           ",\"b_max\":" + std::to_string(w.b_max) +
           ",\"a_max\":" + std::to_string(w.a_max) + "}";
}

std::string to_json(const FourierSymbol& f) {
    std::string out = "{\"format\":\"fourier\",\"symmetrize\":false,\"coefficients\":[";
    bool first = true;
    for (const auto& [key, value] : f.coefficients()) {
        if (!first) out += ",";
        first = false;
        out += "{\"m\":" + std::to_string(key.first) +
               ",\"n\":" + std::to_string(key.second) +
               ",\"re\":" + format_double(value.real()) +
               ",\"im\":" + format_double(value.imag()) + "}";
    }
    return out + "]}";
}

std::string to_json(const OperatorMatrix& A) {
    std::string out = "{\"label\":\"" + json_escape(A.label) + "\"";
    out += ",\"rows\":" + to_json(A.rows);
    out += ",\"cols\":" + to_json(A.cols);
    out += ",\"entries\":[";
    for (Eigen::Index i = 0; i < A.entries.rows(); ++i)
        for (Eigen::Index j = 0; j < A.entries.cols(); ++j) {
            if (i != 0 || j != 0) out += ",";
            out += complex_pair(A.entries(i, j));
        }
    return out + "]}";
}

std::string to_json(const CheckReport& r) {
    std::string out = "{\"name\":\"" + json_escape(r.name) + "\"";
    out += std::string(",\"passed\":") + (r.passed ? "true" : "false");
    out += ",\"residual\":" + format_double(r.residual);
    out += ",\"tolerance\":" + format_double(r.tolerance);
    out += ",\"window\":" + (r.window_used ? to_json(*r.window_used) : "null");
    out += ",\"details\":[";
    bool first = true;
    for (const auto& d : r.details) {
        if (!first) out += ",";
        first = false;
        out += "{\"name\":\"" + json_escape(d.name) +
               "\",\"residual\":" + format_double(d.residual) + "}";
    }
    return out + "]}";
}

FourierSymbol parse_symbol(const std::string& text) {
    const json j = json::parse(text);
    const std::string format = j.at("format").get<std::string>();
    if (format == "fourier") {
        FourierSymbol::CoeffMap coeffs;
        for (const auto& c : j.at("coefficients")) {
            const FourierSymbol::Key key{c.at("m").get<int>(), c.at("n").get<int>()};
            coeffs[key] += Complex{c.at("re").get<double>(), c.value("im", 0.0)};
        }
        if (j.value("symmetrize", false)) {
            // mirror pairs listed once; doubly-listed pairs are averaged
            auto mirrored = coeffs;
            for (const auto& [key, value] : coeffs)
                mirrored.try_emplace({key.second, key.first}, value);
            return FourierSymbol::from_coefficients(std::move(mirrored), true);
        }
        return FourierSymbol::from_coefficients(std::move(coeffs));
    }
    if (format == "sp-poly") {
        SPPoly::TermMap terms;
        for (const auto& t : j.at("terms")) {
            const SPPoly::Key key{t.at("s").get<int>(), t.at("p").get<int>(),
                                  t.at("sbar").get<int>(), t.at("pbar").get<int>()};
            terms[key] += Complex{t.at("re").get<double>(), t.value("im", 0.0)};
        }
        return sp_to_fourier(SPPoly::from_terms(std::move(terms)));
    }
    throw std::invalid_argument("unknown symbol format: " + format);
}

ParsedMatrix parse_matrix(const std::string& text) {
    return parse_matrix_json(json::parse(text));
}

std::pair<ParsedMatrix, ParsedMatrix> parse_matrix_pair(const std::string& text) {
    const json j = json::parse(text);
    return {parse_matrix_json(j.at("T")), parse_matrix_json(j.at("V"))};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace symtoep
