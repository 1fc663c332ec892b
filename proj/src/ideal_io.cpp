#include "stanley/ideal_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Monomial parse_monomial(std::string_view text, int n, std::size_t line_no) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
  if (text == "1") return Monomial(std::move(exps));
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto star = text.find('*', pos);
    const auto factor = text.substr(pos, star == std::string_view::npos ? text.npos : star - pos);
    if (factor.size() < 2 || factor[0] != 'x') fail(line_no, "bad factor '" + std::string(factor) + "'");
    const auto caret = factor.find('^');
    const auto idx = parse_uint(factor.substr(1, caret == factor.npos ? factor.npos : caret - 1));
    if (!idx || *idx < 1 || *idx > static_cast<std::uint64_t>(n)) {
      fail(line_no, "variable in '" + std::string(factor) + "' outside x1..x" + std::to_string(n));
    }
    std::uint64_t e = 1;
    if (caret != factor.npos) {
      const auto parsed = parse_uint(factor.substr(caret + 1));
      if (!parsed || *parsed > 0xFFFFFFFFULL) fail(line_no, "bad exponent in '" + std::string(factor) + "'");
      e = *parsed;
    }
    auto& slot = exps[static_cast<std::size_t>(*idx - 1)];
    if (slot + e > 0xFFFFFFFFULL) fail(line_no, "exponent overflow");
    slot += static_cast<std::uint32_t>(e);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> n;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    std::getline(words, rest);
    const std::string body = strip_spaces(rest);
    if (keyword == "ring") {
      if (n) fail(line_no, "duplicate ring line");
      const auto v = parse_uint(body);
      if (!v || *v < 1 || *v > 4096) fail(line_no, "bad ring size '" + body + "'");
      n = static_cast<int>(*v);
    } else if (keyword == "gen") {
      if (!n) fail(line_no, "gen before ring line");
      if (body.empty()) fail(line_no, "empty generator");
      gens.push_back(parse_monomial(body, *n, line_no));
    } else {
      fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!n) throw InputError("missing ring line");
  return minimalize(gens, *n);
}

MonomialIdeal read_ideal_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open ideal file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.generators()) out += "gen " + g.to_string() + "\n";
  return out;
}

void write_ideal_file(const std::filesystem::path& path, const MonomialIdeal& ideal) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << format_ideal(ideal);
}

}  // namespace stanley
