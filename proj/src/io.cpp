#include "oa/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oa/error.hpp"

namespace oa {

namespace {

struct Token {
    std::int64_t value;
    std::size_t column;
};

// Integers on one line, separated by blanks (space or tab).
std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        std::string_view tok = line.substr(i, j - i);
        if (tok.size() > 1 && tok[0] == '+') tok.remove_prefix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec == std::errc::result_out_of_range)
            throw ParseError("integer out of 64-bit range", lineno, i + 1);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("expected an integer, got '" + std::string(line.substr(i, j - i)) + "'", lineno, i + 1);
        out.push_back({v, i + 1});
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

const char* const kTables[] = {"support_total", "support_maxrep", "maxrep_total"};

Summary::Table& table_by_name(Summary& s, std::string_view name) {
    if (name == "support_total") return s.support_total;
    if (name == "support_maxrep") return s.support_maxrep;
    if (name == "maxrep_total") return s.maxrep_total;
    throw ParameterError("unknown summary table '" + std::string(name) + "'");
}

const Summary::Table& table_by_index(const Summary& s, int i) {
    return i == 0 ? s.support_total : i == 1 ? s.support_maxrep : s.maxrep_total;
}

}  // namespace

std::string write_matrix(const IntMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += std::to_string(m(r, c));
        }
        out += '\n';
    }
    return out;
}

IntMatrix read_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input, expected '<rows> <cols>'", 1, 1);
    const auto head = tokenize(lines[0], 1);
    if (head.size() != 2) throw ParseError("header must be '<rows> <cols>'", 1, 1);
    if (head[0].value < 0 || head[1].value < 0)
        throw ParseError("negative dimension", 1, head[0].value < 0 ? head[0].column : head[1].column);
    const auto rows = static_cast<std::size_t>(head[0].value);
    const auto cols = static_cast<std::size_t>(head[1].value);
    if (lines.size() < rows + 1)
        throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(lines.size() - 1),
                         lines.size() + 1, 1);
    std::vector<std::int64_t> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto toks = tokenize(lines[r + 1], r + 2);
        if (toks.size() != cols)
            throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " + std::to_string(cols),
                             r + 2, toks.size() < cols ? lines[r + 1].size() + 1 : toks[cols].column);
        for (const auto& t : toks) data.push_back(t.value);
    }
    for (std::size_t i = rows + 1; i < lines.size(); ++i)
        if (!blank(lines[i])) throw ParseError("unexpected data after the last row", i + 1, 1);
    return IntMatrix(rows, cols, std::move(data));
}

std::string write_basis(const HilbertBasis& basis) {
    return write_basis(basis.elements(), basis.system().variables());
}

std::string write_basis(std::vector<ReplicateVector> elements, std::size_t width) {
    std::sort(elements.begin(), elements.end());
    std::vector<std::int64_t> data;
    data.reserve(elements.size() * width);
    for (const auto& e : elements) {
        if (e.size() != width) throw DimensionError("basis element length mismatch");
        data.insert(data.end(), e.counts().begin(), e.counts().end());
    }
    return write_matrix(IntMatrix(elements.size(), width, std::move(data)));
}

std::vector<ReplicateVector> read_basis(std::string_view text) {
    const IntMatrix m = read_matrix(text);
    if (m.cols() == 0 || !std::has_single_bit(m.cols()))
        throw ParseError("basis width " + std::to_string(m.cols()) + " is not a power of two", 1, 1);
    const int n = std::countr_zero(m.cols());
    std::vector<ReplicateVector> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] < 0) throw ParseError("negative replicate count", r + 2, 1);
        out.emplace_back(n, std::vector<std::int64_t>(row.begin(), row.end()));
    }
    return out;
}

std::string write_summary_json(const Summary& s) {
    nlohmann::ordered_json j;
    j["elements"] = s.elements;
    static const char* const cols[][2] = {{"support", "total"}, {"support", "maxrep"}, {"maxrep", "total"}};
    for (int t = 0; t < 3; ++t) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [key, count] : table_by_index(s, t)) {
            nlohmann::ordered_json cell;
            cell[cols[t][0]] = key.first;
            cell[cols[t][1]] = key.second;
            cell["count"] = count;
            arr.push_back(std::move(cell));
        }
        j[kTables[t]] = std::move(arr);
    }
    return j.dump(2) + "\n";
}

Summary read_summary_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 1, e.byte);
    }
    static const char* const cols[][2] = {{"support", "total"}, {"support", "maxrep"}, {"maxrep", "total"}};
    Summary s;
    try {
        s.elements = j.at("elements").get<std::size_t>();
        for (int t = 0; t < 3; ++t)
            for (const auto& cell : j.at(kTables[t]))
                table_by_name(s, kTables[t])[{cell.at(cols[t][0]).get<std::int64_t>(),
                                              cell.at(cols[t][1]).get<std::int64_t>()}] =
                    cell.at("count").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 1, 1);
    }
    return s;
}

std::string write_summary_tsv(const Summary& s) {
    std::ostringstream out;
    out << "table\trow\tcol\tcount\n";
    out << "elements\t-\t-\t" << s.elements << '\n';
    for (int t = 0; t < 3; ++t)
        for (const auto& [key, count] : table_by_index(s, t))
            out << kTables[t] << '\t' << key.first << '\t' << key.second << '\t' << count << '\n';
    return out.str();
}

Summary read_summary_tsv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "table\trow\tcol\tcount") throw ParseError("missing TSV header", 1, 1);
    Summary s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (blank(lines[i])) continue;
        std::vector<std::string_view> f;
        std::size_t start = 0;
        for (;;) {
            const std::size_t tab = lines[i].find('\t', start);
            f.push_back(lines[i].substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        if (f.size() != 4) throw ParseError("expected 4 tab-separated fields", i + 1, 1);
        auto num = [&](std::string_view v, std::size_t field) {
            std::int64_t x = 0;
            auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
            if (ec != std::errc() || p != v.data() + v.size() || x < 0)
                throw ParseError("bad count '" + std::string(v) + "'", i + 1, field);
            return x;
        };
        if (f[0] == "elements") {
            s.elements = static_cast<std::size_t>(num(f[3], 4));
            continue;
        }
        try {
            table_by_name(s, f[0])[{num(f[1], 2), num(f[2], 3)}] = static_cast<std::size_t>(num(f[3], 4));
        } catch (const ParameterError& e) {
            throw ParseError(e.what(), i + 1, 1);
        }
    }
    return s;
}

std::string write_classifications_tsv(const std::vector<Classification>& records) {
    std::ostringstream out;
    out << "index\tsupport\ttotal\tmaxrep\tindicator\tb0\tresolution\tregular\toa\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& c = records[i];
        out << i << '\t' << c.support << '\t' << c.total << '\t' << c.maxrep << '\t' << (c.is_indicator ? 1 : 0)
            << '\t' << c.b0.to_string() << '\t' << (c.resolution ? std::to_string(*c.resolution) : "full") << '\t'
            << (c.regular ? (*c.regular ? "1" : "0") : "-") << '\t' << (c.is_oa ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string load_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::filesystem::path& p, std::string_view text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("write failed for " + p.string());
}

}  // namespace oa
