#include "oafrac/io.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "oafrac/errors.hpp"
#include "oafrac/groups.hpp"

namespace oafrac {

const char* const kToolVersion = "oafrac 0.1.0";

std::string format_array(const OrthogonalArray& d) {
    std::ostringstream out;
    out << d.factor_count() << ' ' << d.size() << '\n';
    for (int i = 0; i < d.factor_count(); ++i) {
        if (i > 0) out << ' ';
        out << d.tags()[static_cast<size_t>(i)];
    }
    out << '\n';
    for (int i = 0; i < d.factor_count(); ++i) {
        for (std::uint64_t c = 0; c < d.size(); ++c) {
            if (c > 0) out << ' ';
            out << d.label(i, c);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct Token {
    std::string text;
    int line;    // 1-based
    int column;  // 1-based
};

// Tokens of one physical line; comment and blank lines yield nothing.
std::vector<Token> tokenize_line(const std::string& line, int line_no) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        if (tokens.empty() && line[i] == '#') return {};
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    return tokens;
}

long long parse_int(const Token& tok, const char* what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument(tok.text);
        return v;
    } catch (const std::exception&) {
        throw ParseError(tok.line, tok.column, std::string(what) + " '" + tok.text + "' is not an integer");
    }
}

}  // namespace

OrthogonalArray parse_array(const std::string& text) {
    std::vector<std::vector<Token>> rows;  // non-comment lines, tokenized
    {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto tokens = tokenize_line(line, line_no);
            if (!tokens.empty()) rows.push_back(std::move(tokens));
        }
    }
    if (rows.empty()) throw ParseError(1, 1, "empty array file");

    const auto& header = rows[0];
    if (header.size() != 2)
        throw ParseError(header[0].line, header[0].column,
                         "header must be exactly 'k N'");
    long long k = parse_int(header[0], "factor count");
    long long n = parse_int(header[1], "size");
    if (k < 1 || k > 64) throw ParseError(header[0].line, header[0].column, "factor count out of range");
    if (n < 1) throw ParseError(header[1].line, header[1].column, "size must be positive");
    if (n > (1LL << 26)) throw ParseError(header[1].line, header[1].column, "size too large");

    if (rows.size() < 2) throw ParseError(header[0].line, 1, "missing tag line");
    const auto& tag_tokens = rows[1];
    if (static_cast<long long>(tag_tokens.size()) != k)
        throw ParseError(tag_tokens[0].line, tag_tokens[0].column,
                         "expected " + std::to_string(k) + " tags, found " +
                             std::to_string(tag_tokens.size()));

    std::vector<std::string> tags;
    std::vector<std::vector<std::string>> symbol_sets;
    std::vector<int> orders;
    std::vector<std::unordered_map<std::string, int>> index_of(static_cast<size_t>(k));
    for (long long i = 0; i < k; ++i) {
        const Token& tok = tag_tokens[static_cast<size_t>(i)];
        if (!is_known_tag(tok.text))
            throw ParseError(tok.line, tok.column, "unknown group tag '" + tok.text + "'");
        FiniteGroup g = group_from_tag(tok.text);
        tags.push_back(tok.text);
        orders.push_back(g.order());
        for (int v = 0; v < g.order(); ++v)
            index_of[static_cast<size_t>(i)][g.elements[static_cast<size_t>(v)]] = v;
        symbol_sets.push_back(std::move(g.elements));
    }

    if (static_cast<long long>(rows.size()) != k + 2) {
        int last_line = rows.back()[0].line;
        throw ParseError(last_line, 1,
                         "expected " + std::to_string(k) + " symbol rows, found " +
                             std::to_string(rows.size() - 2));
    }

    std::vector<int> entries(static_cast<size_t>(n) * static_cast<size_t>(k));
    for (long long i = 0; i < k; ++i) {
        const auto& row = rows[static_cast<size_t>(i) + 2];
        if (static_cast<long long>(row.size()) != n) {
            const Token& at = row.size() > static_cast<size_t>(n) ? row[static_cast<size_t>(n)] : row.back();
            throw ParseError(at.line, at.column,
                             "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                 " symbols, expected " + std::to_string(n));
        }
        for (long long c = 0; c < n; ++c) {
            const Token& tok = row[static_cast<size_t>(c)];
            auto it = index_of[static_cast<size_t>(i)].find(tok.text);
            if (it == index_of[static_cast<size_t>(i)].end())
                throw ParseError(tok.line, tok.column,
                                 "unknown symbol '" + tok.text + "' for factor " +
                                     std::to_string(i + 1) + " (tag " + tags[static_cast<size_t>(i)] + ")");
            entries[static_cast<size_t>(c) * static_cast<size_t>(k) + static_cast<size_t>(i)] = it->second;
        }
    }

    return OrthogonalArray(FactorSpec(orders), std::move(tags), std::move(symbol_sets),
                           std::move(entries));
}

std::string array_to_json(const OrthogonalArray& d) {
    nlohmann::json j;
    j["spec"] = d.spec().orders();
    j["tags"] = d.tags();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < d.factor_count(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint64_t c = 0; c < d.size(); ++c) row.push_back(d.label(i, c));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["provenance"]["tool"] = kToolVersion;
    return j.dump(2) + "\n";
}

}  // namespace oafrac
