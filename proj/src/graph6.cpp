// Copyright 2026 The exen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exen/errors.hpp"
#include "exen/graph.hpp"

namespace exen {
namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;
constexpr int kMaxExtendedOrder = 258047;

std::string_view TrimLineEnd(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = TrimLineEnd(text);
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto c = static_cast<unsigned char>(text[k]);
    if (c < kBias || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", base + k);
    }
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("graph6: 8-byte order header is not supported", base + 1);
    }
    if (text.size() < 4) throw ParseError("graph6: truncated order header", base + text.size());
    n = 0;
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kBias);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6: graphs must have at least one vertex", base);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t body = (bits + 5) / 6;
  const std::uint64_t available = text.size() - pos;
  if (available < body) {
    throw ParseError("graph6: truncated bit stream, expected " + std::to_string(body) +
                         " body bytes, found " + std::to_string(available),
                     base + text.size());
  }
  if (available > body) {
    throw ParseError("graph6: unexpected trailing bytes", base + pos + body);
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = text[pos + body - 1] - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: non-zero padding bits", base + pos + body - 1);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExtendedOrder) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxExtendedOrder));
  }
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long> tokens;
  std::vector<std::size_t> offsets;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + k, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) {
      throw ParseError("edge list: non-integer token '" + std::string(text.substr(k, end - k)) + "'",
                       k);
    }
    tokens.push_back(value);
    offsets.push_back(k);
    k = end;
  }
  if (tokens.size() < 2) throw ParseError("edge list: missing '<n> <m>' header", 0);
  const long n = tokens[0];
  const long m = tokens[1];
  if (n < 1) throw ParseError("edge list: vertex count must be positive", offsets[0]);
  if (m < 0) throw ParseError("edge list: negative edge count", offsets[1]);
  if ((tokens.size() - 2) % 2 != 0) {
    throw ParseError("edge list: odd number of endpoint tokens", offsets.back());
  }
  std::vector<Edge> edges;
  for (std::size_t t = 2; t < tokens.size(); t += 2) {
    const long a = tokens[t];
    const long b = tokens[t + 1];
    if (a < 0 || a >= n) throw ParseError("edge list: vertex index out of range", offsets[t]);
    if (b < 0 || b >= n) throw ParseError("edge list: vertex index out of range", offsets[t + 1]);
    if (a == b) throw ParseError("edge list: self-loop at vertex " + std::to_string(a), offsets[t]);
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  Graph g(static_cast<int>(n), edges);
  if (g.size() != m) {
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(g.size()) + " distinct",
                     offsets[1]);
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace exen
