#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankmod/constructions.hpp"
#include "rankmod/ecc.hpp"
#include "rankmod/multiperm.hpp"
#include "rankmod/numbers.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

/// Space-separated 1-based values on one line, e.g. "3 1 2 4 5".
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& line);

/// Multi-permutations serialize as a "ell=<l> m=<m>" header line followed by
/// the same space-separated value line.
std::string format_multipermutation(const MultiPermutation& rho);
MultiPermutation parse_multipermutation(const std::string& header, const std::string& values);

/// Code files: a "n=<n> k=<k> kind=<kind> size=<size>" header line (codes with
/// a distance claim append " d=<d> metric=<metric>"), then one permutation per
/// line in lexicographic order. LF line endings.
void write_code(std::ostream& os, const Code& code);
void write_code(std::ostream& os, const ECCCode& code);

/// A parsed code file before semantic checks: header fields plus raw members.
/// Structural problems (bad header, malformed lines, wrong line count) throw;
/// semantic violations (constraint, distance, duplicates) are the verifier's
/// to report.
struct LoadedCode {
    int n = 0;
    int k = 0;
    ConstraintKind kind = ConstraintKind::two_neighbor;
    size_t declared_size = 0;
    std::optional<int> d;
    std::optional<CodeMetric> metric;
    std::vector<Permutation> members;
};

LoadedCode read_code(std::istream& is);

/// Shortest round-trip decimal form; integral values print without a point.
std::string fmt_double(double v);
/// Rationals print as their nearest double (tables are plot-ready).
std::string fmt_rational(const Rational& q);

/// Exact integer when it fits 64 bits, decimal string otherwise (JSON has no
/// arbitrary-precision numbers).
nlohmann::ordered_json json_big(const BigCount& v);

using Row = nlohmann::ordered_json; // one flat object per table row

/// CSV with a header line; cells taken from each row in column order, empty
/// for null/missing. LF line endings, no quoting (cells never contain commas).
std::string render_csv(const std::vector<std::string>& columns, const std::vector<Row>& rows);

/// The same rows as a JSON array of flat objects.
std::string render_json(const std::vector<Row>& rows);

} // namespace rankmod
