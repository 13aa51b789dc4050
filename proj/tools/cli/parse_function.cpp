#include <cctype>
#include <charconv>

#include "cli.hpp"
#include "flatlab/catalog.hpp"
#include "flatlab/errors.hpp"
#include "flatlab/gf2n.hpp"

namespace flatlab::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t to_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("bad integer '" + std::string(text) + "' for " + std::string(what));
  }
  return v;
}

// "NAME(k=v, ...)" -> name and parameters.
std::pair<std::string, CatalogParams> parse_call(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw UsageError("expected NAME(key=value,...), got '" + std::string(text) + "'");
  }
  std::string name(trim(text.substr(0, open)));
  CatalogParams params;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  if (trim(body).empty()) return {name, params};
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value in '" + std::string(item) + "'");
    std::string key(trim(item.substr(0, eq)));
    if (params.count(key) != 0) throw UsageError("parameter '" + key + "' given twice");
    params[key] = to_integer(item.substr(eq + 1), key);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return {name, params};
}

std::int64_t take(CatalogParams& params, const std::string& call, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError(call + " needs " + key + "=...");
  const auto v = it->second;
  params.erase(it);
  return v;
}

void require_empty(const CatalogParams& params, const std::string& call) {
  if (!params.empty()) throw UsageError(call + " has no parameter '" + params.begin()->first + "'");
}

int field_n(std::int64_t n) {
  if (n < kMinFieldDegree || n > kMaxFieldDegree) throw UsageError("field degree must be in 2..16");
  return static_cast<int>(n);
}

ParsedFunction parse_anf_coordinates(std::string_view spec, std::optional<int> n) {
  if (!n) throw UsageError("ANF input needs --n");
  std::vector<AnfPoly> coords;
  // Position of spec[i], and of the first character of the current coordinate.
  int line = 1;
  int column = 1;
  int seg_line = 1;
  int seg_column = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ';') {
      coords.push_back(parse_anf(spec.substr(start, i - start), *n, seg_line, seg_column));
      start = i + 1;
      seg_line = line;
      seg_column = column + 1;
    }
    if (i < spec.size()) {
      if (spec[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  }
  if (coords.size() > static_cast<std::size_t>(kMaxOutputs)) throw UsageError("at most 32 output coordinates");
  return {VectorialFn(std::move(coords)), "anf", {}};
}

}  // namespace

ParsedFunction parse_function(std::string_view spec, std::optional<int> n, std::optional<int> m,
                              std::optional<std::uint32_t> modulus) {
  const std::string_view body = trim(spec);
  ParsedFunction out = [&]() -> ParsedFunction {
    if (body.rfind("family:", 0) == 0) {
      auto [name, params] = parse_call(body.substr(7));
      CatalogFunction c = build(name, params, modulus);
      return {std::move(c.fn), "family", std::move(c.warnings)};
    }
    if (body.rfind("pow(", 0) == 0) {
      auto [name, params] = parse_call(body);
      const int fn_n = field_n(take(params, "pow", "n"));
      const auto e = take(params, "pow", "e");
      require_empty(params, "pow");
      if (e < 0) throw UsageError("pow exponent must be non-negative");
      return {power_map(FieldSpec(fn_n, modulus), static_cast<std::uint64_t>(e)), "pow", {}};
    }
    if (body.rfind("inv(", 0) == 0) {
      auto [name, params] = parse_call(body);
      const int fn_n = field_n(take(params, "inv", "n"));
      require_empty(params, "inv");
      return {power_map(FieldSpec(fn_n, modulus), (std::uint64_t{1} << fn_n) - 2), "inv", {}};
    }
    if (modulus) throw UsageError("--modulus only applies to univariate inputs");
    return parse_anf_coordinates(spec, n);
  }();
  if (n && *n != out.fn.n()) {
    throw UsageError("--n " + std::to_string(*n) + " disagrees with the function's n = " + std::to_string(out.fn.n()));
  }
  if (m && *m != out.fn.m()) {
    throw UsageError("--m " + std::to_string(*m) + " disagrees with the function's " + std::to_string(out.fn.m()) +
                     " output coordinates");
  }
  return out;
}

}  // namespace flatlab::cli
