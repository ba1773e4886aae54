#include "vpf/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace vpf::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::size_t parse_size(const std::string& s, const char* what) {
    if (!is_integer_literal(s) || s[0] == '-') fail(std::string("bad ") + what + " '" + s + "'");
    Integer v = parse_integer(s);
    if (v > 100000) fail(std::string(what) + " " + s + " is unreasonably large");
    return v.get_ui();
}

Integer json_integer(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    fail("matrix entry " + j.dump() + " is not an integer");
}

IntMatrix parse_json_matrix(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        fail("JSON matrix needs \"rows\", \"cols\" and \"entries\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) fail("\"rows\" and \"cols\" must be nonnegative integers");
    const std::size_t d = j["rows"].get<std::size_t>(), n = j["cols"].get<std::size_t>();
    const auto& e = j["entries"];
    if (!e.is_array() || e.size() != d) fail("\"entries\" must hold " + std::to_string(d) + " rows");
    IntMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r) {
        if (!e[r].is_array() || e[r].size() != n)
            fail("row " + std::to_string(r + 1) + " must hold " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = json_integer(e[r][c]);
    }
    return m;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    if (!is_integer_literal(text)) fail("'" + text + "' is not an integer");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

IntMatrix parse_matrix(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail("empty matrix input");
    if (text[first] == '{') return parse_json_matrix(text);

    std::istringstream in(text);
    std::vector<std::string> tok{std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
    if (tok.size() < 2) fail("matrix header must be \"d n\"");
    const std::size_t d = parse_size(tok[0], "row count"), n = parse_size(tok[1], "column count");
    if (tok.size() != 2 + d * n)
        fail("expected " + std::to_string(d * n) + " entries for a " + std::to_string(d) + "x" + std::to_string(n) +
             " matrix, found " + std::to_string(tok.size() - 2));
    IntMatrix m(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_integer(tok[2 + r * n + c]);
    return m;
}

IntMatrix read_matrix(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) fail("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return parse_matrix(text);
}

IntVector parse_vector(const std::string& text) {
    IntVector out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t a = item.find_first_not_of(' '), b = item.find_last_not_of(' ');
        out.push_back(parse_integer(a == std::string::npos ? "" : item.substr(a, b - a + 1)));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

}  // namespace vpf::io
