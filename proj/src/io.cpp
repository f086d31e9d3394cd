#include "rankrange/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "rankrange/error.hpp"

namespace rankrange {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::string_view token) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw InputError("malformed number '" + std::string(token) + "'");
    }
    return v;
}

json matrix_part(const ComplexMatrix& a, bool imag) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(imag ? a(i, j).imag() : a(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

cplx parse_complex(std::string_view token) {
    const std::string_view t = trim(token);
    if (t.empty()) throw InputError("empty matrix entry");
    const char last = t.back();
    if (last != 'i' && last != 'j') return {parse_real(t, token), 0.0};

    const std::string_view body = t.substr(0, t.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    const std::string_view re = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im = split == std::string_view::npos ? body : body.substr(split);
    double imag;
    if (im.empty() || im == "+") {
        imag = 1.0;
    } else if (im == "-") {
        imag = -1.0;
    } else {
        imag = parse_real(im, token);
    }
    return {re.empty() ? 0.0 : parse_real(re, token), imag};
}

ComplexMatrix matrix_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("re")) {
        throw InputError("matrix JSON needs fields \"n\" and \"re\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw InputError("\"n\" must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());

    auto read_part = [&](const char* key, std::vector<double>& out) {
        const json& rows = doc[key];
        if (!rows.is_array() || rows.size() != n) {
            throw InputError(std::string("\"") + key + "\" must have n rows");
        }
        out.reserve(n * n);
        for (const json& row : rows) {
            if (!row.is_array() || row.size() != n) {
                throw InputError(std::string("\"") + key + "\" rows must have n entries");
            }
            for (const json& v : row) {
                if (!v.is_number()) throw InputError(std::string("non-numeric entry in \"") + key + "\"");
                out.push_back(v.get<double>());
            }
        }
    };
    std::vector<double> re;
    std::vector<double> im;
    read_part("re", re);
    if (doc.contains("im") && !doc["im"].is_null()) {
        read_part("im", im);
    } else {
        im.assign(n * n, 0.0);
    }
    std::vector<cplx> entries(n * n);
    for (std::size_t i = 0; i < n * n; ++i) entries[i] = {re[i], im[i]};
    try {
        return ComplexMatrix(n, n, std::move(entries));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

ComplexMatrix matrix_from_csv(std::string_view text) {
    std::vector<std::vector<cplx>> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty()) continue;
        std::vector<cplx> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            row.push_back(parse_complex(line.substr(start, comma == std::string_view::npos
                                                                ? std::string_view::npos
                                                                : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("empty matrix file");
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw InputError("CSV matrix must be square with n entries per row");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, n, std::move(entries));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') return matrix_from_json(body);
    return matrix_from_csv(body);
}

std::string matrix_to_json(const ComplexMatrix& a) {
    json doc;
    doc["n"] = a.rows();
    doc["re"] = matrix_part(a, false);
    doc["im"] = matrix_part(a, true);
    return doc.dump();
}

std::string region_to_csv(const ConvexRegion& region) {
    std::string out = "x,y\n";
    for (const cplx& z : region.vertices()) {
        out += format_double(z.real());
        out += ',';
        out += format_double(z.imag());
        out += '\n';
    }
    return out;
}

std::string trace_to_csv(const ConvergenceTrace& trace) {
    std::string out = "nu,q_nu,t_nu,hausdorff_to_range\n";
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.nu) + ',' + format_double(rec.q) + ',' + format_double(rec.t) +
               ',' + format_double(rec.hausdorff_to_range) + '\n';
    }
    return out;
}

std::string witness_to_json(const WitnessResult& result) {
    json doc;
    doc["found"] = result.found;
    doc["lambda"] = {result.lambda.real(), result.lambda.imag()};
    doc["residual"] = std::isfinite(result.residual) ? json(result.residual) : json(nullptr);
    doc["iterations"] = result.iterations;
    doc["restarts_used"] = result.restarts_used;
    if (result.isometry.empty()) {
        doc["N"] = nullptr;
    } else {
        doc["N"] = {{"re", matrix_part(result.isometry, false)},
                    {"im", matrix_part(result.isometry, true)}};
    }
    return doc.dump(2);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw InputError("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace rankrange
