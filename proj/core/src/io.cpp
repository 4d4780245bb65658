#include "signlab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace signlab::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> nonblank_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view text, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

// "key=value" -> value
std::string_view expect_key(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
    throw Error(ErrorCode::kParse, "expected '" + std::string(key) + "=...', got '" + std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

int arity_of_length(std::size_t length) {
  for (int n = 1; n <= kMaxArity; ++n) {
    if (cube_size(n) == length) return n;
  }
  throw Error(ErrorCode::kParse, "truth table length " + std::to_string(length) + " is not 2^n with 1 <= n <= 24");
}

}  // namespace

std::string format_truth_table(const BoolFunction& f) {
  std::string out = "n:";
  out.reserve(out.size() + f.size() + 1);
  for (auto v : f.values()) out += v > 0 ? '+' : '-';
  out += '\n';
  return out;
}

BoolFunction parse_truth_table(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.size() != 1) throw Error(ErrorCode::kParse, "truth table must be a single line");
  const auto line = lines.front();
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::kParse, "truth table needs the 'n:' prefix");
  const auto prefix = line.substr(0, colon);
  const auto body = line.substr(colon + 1);
  const int arity = arity_of_length(body.size());
  if (prefix != "n" && parse_int<int>(prefix, "arity") != arity) {
    throw Error(ErrorCode::kParse, "declared arity " + std::string(prefix) + " does not match table length");
  }
  std::vector<std::int8_t> values(body.size());
  for (std::size_t j = 0; j < body.size(); ++j) {
    if (body[j] == '+') values[j] = 1;
    else if (body[j] == '-') values[j] = -1;
    else throw ParseError(colon + 1 + j, "truth table characters must be '+' or '-'");
  }
  return BoolFunction(arity, std::move(values));
}

std::string format_rational_table(const RationalTable& table) {
  std::string out = "n=" + std::to_string(table.arity()) + "\n";
  for (InputMask x = 0; x < table.size(); ++x) {
    if (table[x] != 0) out += std::to_string(x) + " " + format_fraction(table[x]) + "\n";
  }
  return out;
}

namespace {

RationalTable parse_table_lines(const std::vector<std::string_view>& lines, std::size_t first) {
  if (first >= lines.size()) throw Error(ErrorCode::kParse, "missing 'n=<k>' header");
  const int arity = parse_int<int>(expect_key(lines[first], "n"), "arity");
  RationalTable table(arity);
  std::vector<bool> seen(table.size(), false);
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const auto fields = split_ws(lines[i]);
    if (fields.size() != 2) throw Error(ErrorCode::kParse, "expected '<mask> <num>/<den>' on line " + std::to_string(i + 1));
    const auto mask = parse_int<std::uint64_t>(fields[0], "mask");
    if (mask >= table.size()) throw Error(ErrorCode::kParse, "mask " + std::to_string(mask) + " out of range");
    if (seen[mask]) throw Error(ErrorCode::kParse, "duplicate mask " + std::to_string(mask));
    seen[mask] = true;
    table[static_cast<InputMask>(mask)] = parse_rational(fields[1]);
  }
  return table;
}

}  // namespace

RationalTable parse_rational_table(std::string_view text) { return parse_table_lines(nonblank_lines(text), 0); }

std::string format_witness(const DualWitness& witness) {
  return "claimed_degree=" + std::to_string(witness.claimed_degree) + " alpha=" + witness.alpha.to_string() +
         "\n" + format_rational_table(witness.table);
}

DualWitness parse_witness(std::string_view text, const BoolFunction& f) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty witness file");
  const auto header = split_ws(lines.front());
  if (header.size() != 2) throw Error(ErrorCode::kParse, "witness header must be 'claimed_degree=<d> alpha=<a|inf>'");
  const int claimed = parse_int<int>(expect_key(header[0], "claimed_degree"), "claimed degree");
  const Alpha alpha = Alpha::parse(expect_key(header[1], "alpha"));
  return make_witness(f, parse_table_lines(lines, 1), claimed, alpha);
}

std::string format_certificate(const AdversaryCertificate& certificate) {
  std::string out = "m=" + std::to_string(certificate.arity()) + "\n";
  const auto& g = certificate.gamma();
  char buffer[64];
  for (std::size_t x = 0; x < g.dimension(); ++x) {
    for (std::size_t y = x; y < g.dimension(); ++y) {
      if (g(x, y) == 0.0) continue;
      std::snprintf(buffer, sizeof buffer, "%.17g", g(x, y));
      out += std::to_string(x) + " " + std::to_string(y) + " " + buffer + "\n";
    }
  }
  return out;
}

AdversaryCertificate parse_certificate(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "missing 'm=<k>' header");
  const int arity = parse_int<int>(expect_key(lines.front(), "m"), "arity");
  if (arity < 1 || arity > kMaxAdversaryArity) throw Error(ErrorCode::kOutOfRange, "certificate arity out of range");
  DenseMatrix gamma(cube_size(arity));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_ws(lines[i]);
    if (fields.size() != 3) throw Error(ErrorCode::kParse, "expected 'x y value' on line " + std::to_string(i + 1));
    const auto x = parse_int<std::size_t>(fields[0], "x mask");
    const auto y = parse_int<std::size_t>(fields[1], "y mask");
    if (x >= gamma.dimension() || y >= gamma.dimension()) throw Error(ErrorCode::kParse, "mask out of range");
    if (x > y) throw Error(ErrorCode::kParse, "certificate entries must satisfy x <= y");
    double value = 0;
    const auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), value);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size()) {
      throw Error(ErrorCode::kParse, "malformed value '" + std::string(fields[2]) + "'");
    }
    gamma.set_symmetric(x, y, value);
  }
  return AdversaryCertificate(arity, std::move(gamma));
}

std::string format_representation(const SignRepresentation& p) {
  std::ostringstream out;
  out << "n=" << p.arity << " degree<=" << p.degree_bound << "\n";
  for (const auto& [t, c] : p.coefficients) out << t << " " << format_fraction(c) << "\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path.string() + "'");
  out << contents;
}

}  // namespace signlab::io
