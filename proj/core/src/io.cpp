#include "tropattack/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "tropattack/errors.hpp"

namespace tropattack {

namespace {

using json = nlohmann::ordered_json;

json scalar_to_json(const TropScalar& s) {
    if (s.is_neg_inf()) return json("-inf");
    if (s.is_integer()) return json(s.num());
    return json(to_string(s));
}

// Maps a byte offset from nlohmann's exception message to 1-based line and
// column so parse errors point at the offending spot.
std::pair<int, int> line_col_at(const std::string& text, std::size_t byte) {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ParseError make_parse_error(const std::string& what, const std::string& text) {
    // Prefer nlohmann's own "line L, column C"; fall back to "at position N".
    int line = 0, col = 0;
    auto lpos = what.find("line ");
    auto cpos = what.find("column ");
    if (lpos != std::string::npos && cpos != std::string::npos) {
        line = std::atoi(what.c_str() + lpos + 5);
        col = std::atoi(what.c_str() + cpos + 7);
    } else {
        auto ppos = what.find("position ");
        if (ppos != std::string::npos) {
            std::size_t byte = std::strtoull(what.c_str() + ppos + 9, nullptr, 10);
            auto [l, c] = line_col_at(text, byte);
            line = l;
            col = c;
        }
    }
    return ParseError(what, line, col);
}

TropScalar scalar_from_json(const json& v) {
    if (v.is_number_integer()) {
        return TropScalar(static_cast<long long>(v.get<std::int64_t>()));
    }
    if (v.is_number_float()) {
        throw ParseError("matrix entries must be exact: use an integer or a \"p/q\" string");
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "-inf") return TropScalar::neg_inf();
        auto slash = s.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                long long num = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return TropScalar(num);
            }
            long long num = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument(s);
            std::string den_part = s.substr(slash + 1);
            long long den = std::stoll(den_part, &used);
            if (used != den_part.size()) throw std::invalid_argument(s);
            if (den == 0) throw std::invalid_argument(s);
            return TropScalar::ratio(num, den);
        } catch (const std::exception&) {
            throw ParseError("bad matrix entry \"" + s + "\": expected integer, \"p/q\", or \"-inf\"");
        }
    }
    throw ParseError("bad matrix entry: expected integer, \"p/q\", or \"-inf\"");
}

json matrix_to_json(const TropMatrix& m) {
    json data = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

TropMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data")) {
        throw ParseError("matrix document needs \"rows\", \"cols\", and \"data\"");
    }
    if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
        throw ParseError("\"rows\" and \"cols\" must be integers");
    }
    long long rows = doc["rows"].get<long long>();
    long long cols = doc["cols"].get<long long>();
    if (rows < 1 || cols < 1 || rows > 100000 || cols > 100000) {
        throw ParseError("matrix dimensions out of range");
    }
    const json& data = doc["data"];
    if (!data.is_array() || static_cast<long long>(data.size()) != rows) {
        throw ParseError("\"data\" must be an array of " + std::to_string(rows) + " rows");
    }
    TropMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long long i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != cols) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                             " entries");
        }
        for (long long j = 0; j < cols; ++j) {
            m.at(static_cast<int>(i), static_cast<int>(j)) = scalar_from_json(row[j]);
        }
    }
    return m;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

}  // namespace

std::string serialize_matrix(const TropMatrix& m) { return matrix_to_json(m).dump(2) + "\n"; }

TropMatrix parse_matrix(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw make_parse_error(e.what(), text);
    }
    return matrix_from_json(doc);
}

void save_matrix(const std::filesystem::path& path, const TropMatrix& m) {
    write_file(path, serialize_matrix(m));
}

TropMatrix load_matrix(const std::filesystem::path& path) {
    return parse_matrix(read_file(path));
}

std::string matrix_to_tsv(const TropMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += '\t';
            out += to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
    std::string out = "d,trial,seed,kind,success,branch,elapsed_ms,m,n\n";
    for (const auto& r : records) {
        out += std::to_string(r.d) + ',' + std::to_string(r.trial) + ',' +
               std::to_string(r.seed) + ',' + gen_kind_name(r.kind) + ',' +
               (r.success ? "1" : "0") + ',' + r.branch + ',' + format_ms(r.elapsed_ms) + ',' +
               std::to_string(r.m_exp) + ',' + std::to_string(r.n_exp) + '\n';
    }
    return out;
}

std::string summary_csv(const std::vector<DimSummary>& summary) {
    std::string out = "d,kind,success_rate,mean_ms,max_ms\n";
    for (const auto& s : summary) {
        char rate[32];
        std::snprintf(rate, sizeof(rate), "%.4f", s.success_rate);
        out += std::to_string(s.d) + ',' + gen_kind_name(s.kind) + ',' + rate + ',' +
               format_ms(s.mean_ms) + ',' + format_ms(s.max_ms) + '\n';
    }
    return out;
}

void write_records_csv(const std::filesystem::path& path,
                       const std::vector<ExperimentRecord>& records) {
    write_file(path, records_csv(records));
}

void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<DimSummary>& summary) {
    write_file(path, summary_csv(summary));
}

void save_instance(const std::filesystem::path& path,
                   const std::vector<std::pair<std::string, TropMatrix>>& matrices,
                   const std::vector<std::pair<std::string, long long>>& scalars) {
    json doc = json::object();
    for (const auto& [name, value] : scalars) doc[name] = value;
    for (const auto& [name, m] : matrices) doc[name] = matrix_to_json(m);
    write_file(path, doc.dump(2) + "\n");
}

}  // namespace tropattack
