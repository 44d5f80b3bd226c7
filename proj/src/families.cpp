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

#include "exen/families.hpp"

#include <array>
#include <charconv>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "exen/errors.hpp"
#include "exen/random.hpp"
#include "exen/structure.hpp"

namespace exen::families {
namespace {

void RequireOrder(int n, int min, const char* family) {
  if (n < min) {
    throw std::invalid_argument(std::string(family) + ": order must be at least " +
                                std::to_string(min));
  }
}

bool IsPrime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

constexpr std::array<std::uint16_t, 16> kClebschComplementRows = {
    0x7EE8, 0xBDD4, 0xDBB2, 0xE771, 0xE78E, 0xDB4D, 0xBD2B, 0x7E17,
    0xE87E, 0xD4BD, 0xB2DB, 0x71E7, 0x8EE7, 0x4DDB, 0x2BBD, 0x177E,
};

}  // namespace

Graph complete(int n) {
  RequireOrder(n, 1, "complete");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph empty(int n) {
  RequireOrder(n, 1, "empty");
  return Graph(n);
}

Graph path(int n) {
  RequireOrder(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle(int n) {
  RequireOrder(n, 3, "cycle");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be non-empty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, edges);
}

Graph matching(int order) {
  RequireOrder(order, 2, "matching");
  if (order % 2 != 0) throw std::invalid_argument("matching: order must be even");
  std::vector<Edge> edges;
  for (int i = 0; i < order; i += 2) edges.push_back({i, i + 1});
  return Graph(order, edges);
}

Graph circulant(int n, std::span<const int> connections) {
  RequireOrder(n, 1, "circulant");
  std::vector<Edge> edges;
  for (int s : connections) {
    const int step = ((s % n) + n) % n;
    if (step == 0) throw std::invalid_argument("circulant: connection 0 mod n is a self-loop");
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + step) % n});
  }
  return Graph(n, edges);
}

Graph paley(int q) {
  if (!IsPrime(q) || q % 4 != 1) {
    throw std::invalid_argument("paley: q must be a prime congruent to 1 mod 4");
  }
  std::vector<bool> residue(q, false);
  for (long x = 1; x < q; ++x) residue[(x * x) % q] = true;
  std::vector<Edge> edges;
  for (int j = 1; j < q; ++j) {
    for (int i = 0; i < j; ++i) {
      if (residue[j - i]) edges.push_back({i, j});
    }
  }
  return Graph(q, edges);
}

Graph clebsch_complement() {
  std::vector<Edge> edges;
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      if ((kClebschComplementRows[i] >> j) & 1U) {
        if (i == j || !((kClebschComplementRows[j] >> i) & 1U)) {
          throw NumericError("clebsch_complement: adjacency table is not symmetric");
        }
        if (i < j) edges.push_back({i, j});
      }
    }
  }
  Graph g(16, edges);
  if (strongly_regular_parameters(g) != SrgParameters{16, 10, 6, 6}) {
    throw NumericError("clebsch_complement: table is not srg(16,10,6,6)");
  }
  return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  RequireOrder(n, 1, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (unit_double(rng) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string_view> SplitTopLevel(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (s[k] == sep && depth == 0) {
      parts.push_back(Trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  parts.push_back(Trim(s.substr(start)));
  return parts;
}

template <typename T>
T ParseNumber(std::string_view token, std::string_view spec) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      value = std::stod(std::string(token), &used);
      if (used != token.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("family spec '" + std::string(spec) + "': bad number '" +
                       std::string(token) + "'");
    }
  } else {
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("family spec '" + std::string(spec) + "': bad integer '" +
                       std::string(token) + "'");
    }
  }
  return value;
}

}  // namespace

Graph from_spec(std::string_view spec) {
  spec = Trim(spec);
  auto wrapped = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (spec.starts_with(prefix) && spec.ends_with(")")) {
      return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
    }
    return std::nullopt;
  };
  if (auto inner = wrapped("complement(")) return complement(from_spec(*inner));
  if (auto inner = wrapped("union(")) {
    const auto parts = SplitTopLevel(*inner, ',');
    if (parts.size() < 2) throw ParseError("union(...) needs at least two operands");
    Graph g = from_spec(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) g = disjoint_union(g, from_spec(parts[k]));
    return g;
  }

  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  std::vector<std::string_view> args;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    std::size_t start = 0;
    for (std::size_t k = 0; k <= rest.size(); ++k) {
      if (k == rest.size() || rest[k] == ',' || rest[k] == ':') {
        args.push_back(Trim(rest.substr(start, k - start)));
        start = k + 1;
      }
    }
  }
  auto arity = [&](std::size_t count) {
    if (args.size() != count) {
      throw ParseError("family spec '" + std::string(spec) + "': expected " +
                       std::to_string(count) + " argument(s)");
    }
  };
  auto int_arg = [&](std::size_t k) { return ParseNumber<int>(args[k], spec); };

  if (name == "complete") {
    arity(1);
    return complete(int_arg(0));
  }
  if (name == "empty") {
    arity(1);
    return empty(int_arg(0));
  }
  if (name == "path") {
    arity(1);
    return path(int_arg(0));
  }
  if (name == "cycle") {
    arity(1);
    return cycle(int_arg(0));
  }
  if (name == "star") {
    arity(1);
    return star(int_arg(0));
  }
  if (name == "complete_bipartite") {
    arity(2);
    return complete_bipartite(int_arg(0), int_arg(1));
  }
  if (name == "matching") {
    arity(1);
    return matching(int_arg(0));
  }
  if (name == "paley") {
    arity(1);
    return paley(int_arg(0));
  }
  if (name == "clebsch_complement") {
    arity(0);
    return clebsch_complement();
  }
  if (name == "circulant") {
    if (args.empty()) throw ParseError("circulant needs an order");
    std::vector<int> connections;
    for (std::size_t k = 1; k < args.size(); ++k) connections.push_back(int_arg(k));
    return circulant(int_arg(0), connections);
  }
  if (name == "gnp") {
    arity(3);
    return random_gnp(int_arg(0), ParseNumber<double>(args[1], spec),
                      ParseNumber<std::uint64_t>(args[2], spec));
  }
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace exen::families
