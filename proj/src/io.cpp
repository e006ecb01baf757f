#include "irrdecomp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "irrdecomp/errors.hpp"

namespace irrdecomp::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty, non-comment lines.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw FormatError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

Exponent parse_exponent(std::string_view tok, std::size_t line, bool allow_inf) {
  if (tok == "inf") {
    if (!allow_inf) throw FormatError(line, "'inf' is not allowed in generator exponents");
    return kInf;
  }
  if (!tok.empty() && tok.front() == '-') {
    throw FormatError(line, "negative exponent '" + std::string(tok) + "'");
  }
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range || (ec == std::errc() && p == tok.data() + tok.size() &&
                                               v > Exponent::kMaxFinite)) {
    throw FormatError(line, "exponent '" + std::string(tok) + "' exceeds 2^32");
  }
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw FormatError(line, "invalid exponent '" + std::string(tok) + "'");
  }
  return Exponent(v);
}

ExpVector parse_row(const Line& l, std::size_t n, bool allow_inf) {
  if (l.tokens.size() != n) {
    throw FormatError(l.number, "expected " + std::to_string(n) + " exponents, got " +
                                    std::to_string(l.tokens.size()));
  }
  ExpVector v;
  v.reserve(n);
  for (auto tok : l.tokens) v.push_back(parse_exponent(tok, l.number, allow_inf));
  return v;
}

void append_row(std::string& out, const ExpVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(v[i]);
  }
  out += '\n';
}

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GeneratorSet parse_ideal(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError(0, "empty ideal file");
  const auto& head = lines.front();
  if (head.tokens.front() != "ideal" || head.tokens.size() < 2) {
    throw FormatError(head.number, "expected header 'ideal <n> [names...]'");
  }
  const auto n = parse_count(head.tokens[1], head.number, "variable count");
  if (n == 0) throw FormatError(head.number, "variable count must be positive");
  GeneratorSet g;
  g.n = static_cast<std::size_t>(n);
  if (head.tokens.size() > 2) {
    if (head.tokens.size() != 2 + g.n) {
      throw FormatError(head.number, "expected " + std::to_string(n) + " variable names");
    }
    for (std::size_t i = 2; i < head.tokens.size(); ++i) g.names.emplace_back(head.tokens[i]);
  }
  bool terminated = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (terminated) throw FormatError(l.number, "content after 'end'");
    if (l.tokens.size() == 1 && l.tokens.front() == "end") {
      terminated = true;
      continue;
    }
    g.gens.push_back(parse_row(l, g.n, false));
  }
  if (!terminated) throw FormatError(0, "missing 'end' terminator");
  return g;
}

std::string emit_ideal(const GeneratorSet& g) {
  std::string out = "ideal " + std::to_string(g.n);
  for (const auto& name : g.names) out += ' ' + name;
  out += '\n';
  for (const auto& m : g.gens) append_row(out, m);
  out += "end\n";
  return out;
}

ComponentSet parse_components(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw FormatError(0, "empty component file");
  const auto& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens.front() != "components") {
    throw FormatError(head.number, "expected header 'components <n> <r>'");
  }
  const auto n = parse_count(head.tokens[1], head.number, "variable count");
  const auto r = parse_count(head.tokens[2], head.number, "component count");
  if (n == 0) throw FormatError(head.number, "variable count must be positive");
  ComponentSet c;
  c.n = static_cast<std::size_t>(n);
  std::size_t i = 1;
  for (; i < lines.size() && c.comps.size() < r; ++i) {
    if (lines[i].tokens.size() == 1 && lines[i].tokens.front() == "end") {
      throw FormatError(lines[i].number, "expected " + std::to_string(r) + " components, got " +
                                             std::to_string(c.comps.size()));
    }
    c.comps.push_back(parse_row(lines[i], c.n, true));
  }
  if (c.comps.size() < r) throw FormatError(0, "missing component rows");
  if (i >= lines.size() || lines[i].tokens.size() != 1 || lines[i].tokens.front() != "end") {
    throw FormatError(i < lines.size() ? lines[i].number : 0, "expected 'end'");
  }
  if (i + 1 < lines.size()) throw FormatError(lines[i + 1].number, "content after 'end'");
  return c;
}

std::string emit_components(const ComponentSet& c) {
  std::vector<ExpVector> rows = c.comps;
  lex_sort(rows);
  std::string out = "components " + std::to_string(c.n) + ' ' + std::to_string(rows.size()) + '\n';
  for (const auto& b : rows) append_row(out, b);
  out += "end\n";
  return out;
}

GeneratorSet read_ideal_file(const std::string& path) { return parse_ideal(read_all(path)); }

ComponentSet read_components_file(const std::string& path) {
  return parse_components(read_all(path));
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(0, "cannot write '" + path + "'");
  out << contents;
}

namespace {

nlohmann::ordered_json vector_json(const ExpVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (auto e : v) {
    if (e.is_inf()) {
      arr.push_back("inf");
    } else {
      arr.push_back(e.value());
    }
  }
  return arr;
}

}  // namespace

std::string trace_line(const incremental::StepRecord& rec, const ArtinianizedIdeal& a) {
  nlohmann::ordered_json j;
  j["step"] = rec.step;
  j["alpha"] = vector_json(rec.alpha);
  j["t1_size"] = rec.t1.size();
  j["t2_size"] = rec.t2.size();
  auto kept = nlohmann::ordered_json::array();
  auto rejected = nlohmann::ordered_json::array();
  for (const auto& c : rec.candidates) {
    nlohmann::ordered_json e;
    e["beta"] = vector_json(deartinianize(c.beta, a));
    e["u"] = c.u + 1;
    if (c.d) {
      e["d"] = c.d->value();
    } else {
      e["d"] = nullptr;
    }
    e["component"] = vector_json(deartinianize(c.component, a));
    (c.kept ? kept : rejected).push_back(std::move(e));
  }
  j["kept"] = std::move(kept);
  j["rejected"] = std::move(rejected);
  return j.dump();
}

}  // namespace irrdecomp::io
