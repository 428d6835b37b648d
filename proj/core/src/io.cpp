#include "sta/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sta/errors.hpp"

namespace sta {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t stop = std::min(byte, text.size());
    int line = 1;
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

json parse_text(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                         e.what());
    }
}

int require_int(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(path + ": missing or non-integer field \"" + key + "\"");
    }
    return j[key].get<int>();
}

FieldMode require_field(const json& j, const std::string& path) {
    if (!j.contains("field") || !j["field"].is_string()) {
        throw ParseError(path + ": missing \"field\" (\"real\" or \"complex\")");
    }
    std::string f = j["field"].get<std::string>();
    if (f == "real") return FieldMode::Real;
    if (f == "complex") return FieldMode::Complex;
    throw ParseError(path + ": field must be \"real\" or \"complex\", got \"" + f + "\"");
}

Complex read_value(const json& item, FieldMode mode, const std::string& path) {
    double re = item.value("re", 0.0);
    double im = item.value("im", 0.0);
    if (mode == FieldMode::Real && im != 0.0) {
        throw ParseError(path + ": nonzero imaginary part in a real tensor");
    }
    return Complex(re, im);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    return out;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

HomPoly read_poly_json(const std::string& path) {
    std::string text = read_file(path);
    json j = parse_text(text, path);
    if (!j.is_object()) throw ParseError(path + ": top level must be an object");

    int n = require_int(j, "n", path);
    int d = require_int(j, "d", path);
    if (n < 1 || d < 1) throw ParseError(path + ": n and d must be positive");
    FieldMode mode = require_field(j, path);

    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_array()) throw ParseError(path + ": \"coeffs\" must be an array");
        auto basis = MonomialBasis::get(n, d);
        Eigen::VectorXcd p = Eigen::VectorXcd::Zero(basis->size());
        std::vector<char> seen(basis->size(), 0);
        long pos = 0;
        for (const json& item : j["coeffs"]) {
            ++pos;
            if (!item.is_object() || !item.contains("alpha") || !item["alpha"].is_array()) {
                throw ParseError(path + ": coeff #" + std::to_string(pos) +
                                 " needs an \"alpha\" array");
            }
            Exponent alpha;
            int total = 0;
            for (const json& a : item["alpha"]) {
                if (!a.is_number_integer() || a.get<int>() < 0) {
                    throw ParseError(path + ": coeff #" + std::to_string(pos) +
                                     ": alpha entries must be nonnegative integers");
                }
                alpha.push_back(a.get<int>());
                total += alpha.back();
            }
            if (static_cast<int>(alpha.size()) != n || total != d) {
                throw ParseError(path + ": coeff #" + std::to_string(pos) + ": alpha must have " +
                                 std::to_string(n) + " entries summing to " + std::to_string(d));
            }
            int idx = basis->index_of(alpha);
            if (seen[idx]) {
                throw ParseError(path + ": coeff #" + std::to_string(pos) +
                                 ": duplicate exponent");
            }
            seen[idx] = 1;
            p[idx] = read_value(item, mode, path);
        }
        return HomPoly(basis, std::move(p), mode);
    }

    if (j.contains("entries")) {
        if (!j["entries"].is_array()) throw ParseError(path + ": \"entries\" must be an array");
        std::vector<TensorEntry> entries;
        long pos = 0;
        for (const json& item : j["entries"]) {
            ++pos;
            if (!item.is_object() || !item.contains("index") || !item["index"].is_array()) {
                throw ParseError(path + ": entry #" + std::to_string(pos) +
                                 " needs an \"index\" array");
            }
            TensorEntry entry;
            for (const json& a : item["index"]) {
                if (!a.is_number_integer()) {
                    throw ParseError(path + ": entry #" + std::to_string(pos) +
                                     ": index entries must be integers");
                }
                entry.index.push_back(a.get<int>());
            }
            entry.value = read_value(item, mode, path);
            entries.push_back(std::move(entry));
        }
        try {
            return entries_to_poly(n, d, entries, mode);
        } catch (const Error& e) {
            throw ParseError(path + ": " + e.what());
        }
    }

    throw ParseError(path + ": expected a \"coeffs\" or \"entries\" array");
}

void write_poly_json(const std::string& path, const HomPoly& P) {
    json j;
    j["n"] = P.n();
    j["d"] = P.d();
    j["field"] = (P.mode() == FieldMode::Real) ? "real" : "complex";
    json coeffs = json::array();
    const auto& basis = P.basis();
    for (long idx = 0; idx < basis.size(); ++idx) {
        Complex c = P.coeffs()[idx];
        if (c == Complex(0.0, 0.0)) continue;
        json item;
        item["alpha"] = basis.exponent(idx);
        item["re"] = c.real();
        item["im"] = c.imag();
        coeffs.push_back(std::move(item));
    }
    j["coeffs"] = std::move(coeffs);
    open_out(path) << j.dump(2) << "\n";
}

std::pair<Decomposition, int> read_decomposition_json(const std::string& path) {
    std::string text = read_file(path);
    json j = parse_text(text, path);
    if (!j.is_object()) throw ParseError(path + ": top level must be an object");

    int r = require_int(j, "r", path);
    int n = require_int(j, "n", path);
    int d = require_int(j, "d", path);
    if (r < 1 || n < 1 || d < 1) throw ParseError(path + ": r, n, d must be positive");
    FieldMode mode = require_field(j, path);

    if (!j.contains("weights") || !j["weights"].is_array() ||
        static_cast<int>(j["weights"].size()) != r) {
        throw ParseError(path + ": \"weights\" must be an array of length r");
    }
    Eigen::VectorXd w(r);
    for (int i = 0; i < r; ++i) {
        if (!j["weights"][i].is_number()) {
            throw ParseError(path + ": weights must be numbers");
        }
        w[i] = j["weights"][i].get<double>();
    }

    if (!j.contains("vectors") || !j["vectors"].is_array() ||
        static_cast<int>(j["vectors"].size()) != r) {
        throw ParseError(path + ": \"vectors\" must be an array of r vectors");
    }
    Eigen::MatrixXcd V(n, r);
    for (int c = 0; c < r; ++c) {
        const json& col = j["vectors"][c];
        if (!col.is_array() || static_cast<int>(col.size()) != n) {
            throw ParseError(path + ": vector #" + std::to_string(c + 1) + " must have " +
                             std::to_string(n) + " components");
        }
        for (int i = 0; i < n; ++i) {
            V(i, c) = read_value(col[i], mode, path);
        }
    }

    Decomposition p{std::move(w), std::move(V), mode};
    try {
        p.validate();
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return {std::move(p), d};
}

void write_decomposition_json(const std::string& path, const Decomposition& p, int d) {
    json j;
    j["r"] = p.r();
    j["n"] = p.n();
    j["d"] = d;
    j["field"] = (p.mode == FieldMode::Real) ? "real" : "complex";
    j["weights"] = json::array();
    for (int i = 0; i < p.r(); ++i) j["weights"].push_back(p.w[i]);
    json vectors = json::array();
    for (int c = 0; c < p.r(); ++c) {
        json col = json::array();
        for (int i = 0; i < p.n(); ++i) col.push_back(complex_json(p.V(i, c)));
        vectors.push_back(std::move(col));
    }
    j["vectors"] = std::move(vectors);
    open_out(path) << j.dump(2) << "\n";
}

void write_trace_csv(const std::string& path, const std::vector<TraceRow>& trace) {
    std::ofstream out = open_out(path);
    out << "k,f,delta,rho,accepted\n";
    out.precision(17);
    for (const TraceRow& row : trace) {
        out << row.k << ',' << row.f << ',' << row.delta << ',' << row.rho << ','
            << (row.accepted ? 1 : 0) << '\n';
    }
}

std::string perturbation_csv(const ExperimentSummary& summary, int r, double eps) {
    std::ostringstream out;
    out.precision(17);
    out << "r,eps,err_min,err_med,err_max,avg_time_s,avg_iters\n";
    out << r << ',' << eps << ',' << summary.err_min << ',' << summary.err_med << ','
        << summary.err_max << ',' << summary.avg_time_seconds << ',' << summary.avg_iterations
        << "\n";
    return out.str();
}

}  // namespace sta
