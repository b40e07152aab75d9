#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dijklab/graph.hpp"

namespace dijklab {

namespace detail {

/// Splits text into lines, dropping blank lines and whole-line `#` comments.
/// Each kept line carries its 1-based line number for diagnostics.
inline std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
    ++number;
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

inline bool is_inf_token(std::string_view token) {
  constexpr std::string_view inf = "inf";
  return token.size() == inf.size() &&
         std::equal(token.begin(), token.end(), inf.begin(), [](char a, char b) {
           return std::tolower(static_cast<unsigned char>(a)) == b;
         });
}

[[noreturn]] inline void malformed(int line, std::string_view token, std::string_view what) {
  throw Error(ErrorKind::MalformedInput,
              "line " + std::to_string(line) + ": " + std::string(what) + " '" + std::string(token) + "'");
}

template <typename T>
T parse_number(std::string_view token, int line, std::string_view what) {
  T value{};
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) malformed(line, token, what);
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) malformed(line, token, what);
  }
  return value;
}

template <WeightScalar Scalar>
Scalar parse_weight_token(std::string_view token, int line) {
  if (is_inf_token(token)) return SentinelTraits<Scalar>::encoded();
  const Scalar x = parse_number<Scalar>(token, line, "non-numeric weight");
  if (SentinelTraits<Scalar>::is_sentinel(x)) malformed(line, token, "weight collides with sentinel");
  return x;
}

inline std::size_t parse_count(std::string_view token, int line, std::string_view what) {
  if (!token.empty() && token.front() == '+') malformed(line, token, what);
  return parse_number<std::size_t>(token, line, what);
}

template <WeightScalar Scalar>
std::string format_scalar(Scalar x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

}  // namespace detail

/// Matrix format: optional `#` comment lines, then n, then n*n row-major
/// tokens. A token is a decimal literal or `INF` (any case).
template <WeightScalar Scalar = double>
Graph<Scalar> parse_matrix_text(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> tokens;
  for (const auto& [line, content] : detail::content_lines(text)) {
    for (std::string_view token : detail::split_tokens(content)) tokens.emplace_back(line, token);
  }
  if (tokens.empty()) throw Error(ErrorKind::MalformedInput, "empty matrix input");
  const std::size_t n = detail::parse_count(tokens[0].second, tokens[0].first, "bad vertex count");
  if (n == 0) detail::malformed(tokens[0].first, tokens[0].second, "vertex count must be >= 1");
  if (tokens.size() - 1 != n * n) {
    throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(n * n) + " matrix entries, found " +
                                               std::to_string(tokens.size() - 1));
  }
  const auto size = static_cast<Eigen::Index>(n);
  WeightMatrix<Scalar> d(size, size);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto& [line, token] = tokens[k + 1];
    d(static_cast<Eigen::Index>(k / n), static_cast<Eigen::Index>(k % n)) =
        detail::parse_weight_token<Scalar>(token, line);
  }
  return Graph<Scalar>(std::move(d));
}

/// Edge-list format: first content line `n m`, then m lines `u v w`.
template <WeightScalar Scalar = double>
Graph<Scalar> parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw Error(ErrorKind::MalformedInput, "empty edge-list input");
  const auto header = detail::split_tokens(lines[0].second);
  if (header.size() != 2) {
    detail::malformed(lines[0].first, lines[0].second, "expected header 'n m'");
  }
  const std::size_t n = detail::parse_count(header[0], lines[0].first, "bad vertex count");
  const std::size_t m = detail::parse_count(header[1], lines[0].first, "bad edge count");
  if (n == 0) detail::malformed(lines[0].first, header[0], "vertex count must be >= 1");
  if (lines.size() - 1 != m) {
    throw Error(ErrorKind::MalformedInput,
                "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  }

  const auto size = static_cast<Eigen::Index>(n);
  WeightMatrix<Scalar> d = WeightMatrix<Scalar>::Constant(size, size, SentinelTraits<Scalar>::encoded());
  d.diagonal().setZero();
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t e = 1; e <= m; ++e) {
    const auto& [line, content] = lines[e];
    const auto fields = detail::split_tokens(content);
    if (fields.size() != 3) detail::malformed(line, content, "expected 'u v w'");
    const auto u = VertexId(detail::parse_number<int>(fields[0], line, "bad vertex"));
    const auto v = VertexId(detail::parse_number<int>(fields[1], line, "bad vertex"));
    for (VertexId x : {u, v}) {
      if (!x.valid_for(n)) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "line " + std::to_string(line) + ": vertex " + to_string(x) + " outside 1.." + std::to_string(n));
      }
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line) + ": self loop on " + to_string(u));
    if (detail::is_inf_token(fields[2])) detail::malformed(line, fields[2], "edge weight must be finite");
    const Scalar w = detail::parse_weight_token<Scalar>(fields[2], line);
    if (!(w > Scalar(0))) {
      throw Error(ErrorKind::NegativeOrZeroWeight,
                  "line " + std::to_string(line) + ": weight '" + std::string(fields[2]) + "' must be > 0");
    }
    if (!seen.emplace(u, v).second) {
      throw Error(ErrorKind::DuplicateEdge,
                  "line " + std::to_string(line) + ": arc " + to_string(u) + "->" + to_string(v) + " listed twice");
    }
    d(static_cast<Eigen::Index>(u.index()), static_cast<Eigen::Index>(v.index())) = w;
  }
  return Graph<Scalar>(std::move(d));
}

/// Writes any dense matrix in the matrix file format, `INF` for the sentinel.
template <WeightScalar Scalar>
std::string to_matrix_text(const WeightMatrix<Scalar>& d) {
  std::string out = std::to_string(d.rows()) + "\n";
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (j > 0) out += ' ';
      out += SentinelTraits<Scalar>::is_sentinel(d(i, j)) ? std::string("INF") : detail::format_scalar(d(i, j));
    }
    out += '\n';
  }
  return out;
}

template <WeightScalar Scalar>
std::string to_matrix_text(const Graph<Scalar>& g) {
  return to_matrix_text<Scalar>(g.matrix());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// `.edges` files use the edge-list format; anything else is a matrix file.
template <WeightScalar Scalar = double>
Graph<Scalar> read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".edges") return parse_edge_list<Scalar>(text);
  return parse_matrix_text<Scalar>(text);
}

}  // namespace dijklab
