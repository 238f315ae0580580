#include "rankmod/io.hpp"

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rankmod {

std::string format_permutation(const Permutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(p(i));
    }
    return out;
}

namespace {

std::vector<int> parse_int_line(const std::string& line, const char* who) {
    std::istringstream ss(line);
    std::vector<int> vals;
    int x;
    while (ss >> x) vals.push_back(x);
    ss.clear(); // extraction failure leaves failbit set; probe for leftovers
    std::string rest;
    if (ss >> rest)
        throw std::invalid_argument(std::string(who) + ": malformed integer line: " + line);
    return vals;
}

} // namespace

Permutation parse_permutation(const std::string& line) {
    return Permutation(parse_int_line(line, "parse_permutation"));
}

std::string format_multipermutation(const MultiPermutation& rho) {
    std::string out = "ell=" + std::to_string(rho.ell()) + " m=" + std::to_string(rho.m()) + "\n";
    for (int j = 1; j <= rho.size(); ++j) {
        if (j > 1) out += ' ';
        out += std::to_string(rho.symbol(j));
    }
    return out;
}

namespace {

// Parses "key=value" tokens into pairs, preserving order.
std::vector<std::pair<std::string, std::string>> parse_header_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::pair<std::string, std::string>> out;
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
            throw std::invalid_argument("header: malformed token '" + tok + "'");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

int to_int(const std::string& s, const std::string& key) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("header: " + key + " is not an integer: " + s);
    return v;
}

} // namespace

MultiPermutation parse_multipermutation(const std::string& header, const std::string& values) {
    int ell = -1, m = -1;
    for (const auto& [key, val] : parse_header_tokens(header)) {
        if (key == "ell") ell = to_int(val, key);
        else if (key == "m") m = to_int(val, key);
        else throw std::invalid_argument("multi-permutation header: unknown key '" + key + "'");
    }
    if (ell < 0 || m < 0)
        throw std::invalid_argument("multi-permutation header: need ell= and m=");
    return MultiPermutation(ell, m, parse_int_line(values, "parse_multipermutation"));
}

namespace {

void write_members(std::ostream& os, const std::vector<Permutation>& members) {
    for (const Permutation& p : members) os << format_permutation(p) << '\n';
}

} // namespace

void write_code(std::ostream& os, const Code& code) {
    os << "n=" << code.n << " k=" << code.k << " kind=" << to_string(code.kind)
       << " size=" << code.members.size() << '\n';
    write_members(os, code.members);
}

void write_code(std::ostream& os, const ECCCode& code) {
    os << "n=" << code.base.n << " k=" << code.base.k << " kind=" << to_string(code.base.kind)
       << " size=" << code.base.members.size() << " d=" << code.min_distance_claim
       << " metric=" << to_string(code.metric) << '\n';
    write_members(os, code.base.members);
}

LoadedCode read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("code file: missing header line");
    LoadedCode out;
    bool have_n = false, have_k = false, have_kind = false, have_size = false;
    // Malformed values surface as invalid_argument from the field parsers;
    // callers of read_code see one exception type for any broken file.
    try {
        for (const auto& [key, val] : parse_header_tokens(header)) {
            if (key == "n") { out.n = to_int(val, key); have_n = true; }
            else if (key == "k") { out.k = to_int(val, key); have_k = true; }
            else if (key == "kind") { out.kind = constraint_kind_from_string(val); have_kind = true; }
            else if (key == "size") { out.declared_size = static_cast<size_t>(to_int(val, key)); have_size = true; }
            else if (key == "d") out.d = to_int(val, key);
            else if (key == "metric") out.metric = code_metric_from_string(val);
            else throw std::runtime_error("unknown header key '" + key + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("code file: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string("code file: ") + e.what());
    }
    if (!have_n || !have_k || !have_kind || !have_size)
        throw std::runtime_error("code file: header must declare n, k, kind and size");
    if (out.d.has_value() != out.metric.has_value())
        throw std::runtime_error("code file: d and metric must appear together");

    std::string line;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            Permutation p = parse_permutation(line);
            if (p.size() != out.n)
                throw std::invalid_argument("member of length " + std::to_string(p.size())
                                            + ", expected " + std::to_string(out.n));
            out.members.push_back(std::move(p));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("code file line " + std::to_string(line_no) + ": "
                                     + e.what());
        }
    }
    if (out.members.size() != out.declared_size)
        throw std::runtime_error("code file: " + std::to_string(out.members.size())
                                 + " members but size=" + std::to_string(out.declared_size));
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::logic_error("fmt_double: to_chars failed");
    return std::string(buf, p);
}

std::string fmt_rational(const Rational& q) {
    return fmt_double(rational_to_double(q));
}

nlohmann::ordered_json json_big(const BigCount& v) {
    static const BigCount lo = std::numeric_limits<std::int64_t>::min();
    static const BigCount hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_float()) return fmt_double(v.get<double>());
    throw std::logic_error("csv_cell: unsupported value type");
}

} // namespace

std::string render_csv(const std::vector<std::string>& columns, const std::vector<Row>& rows) {
    std::string out;
    for (size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const Row& row : rows) {
        for (size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            if (row.contains(columns[c])) out += csv_cell(row.at(columns[c]));
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<Row>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& row : rows) arr.push_back(row);
    return arr.dump(2) + "\n";
}

} // namespace rankmod
