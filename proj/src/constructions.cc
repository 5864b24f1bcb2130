// Copyright 2026 The Gateway Games Authors
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

#include "gateway/constructions.h"

#include <string>

#include "gateway/error.h"

namespace gateway {
namespace {

[[noreturn]] void OutOfRange(const std::string& message) {
  throw GameError(ErrorCode::kParameterOutOfRange, message);
}

std::string Str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return FormatRational(q);
}

// Collects edges and per-node roles while a generator lays out ids.
class Builder {
 public:
  NodeId Add(std::string role) {
    roles_.node_roles.push_back(std::move(role));
    return static_cast<NodeId>(roles_.node_roles.size()) - 1;
  }
  void Link(NodeId a, NodeId b) { edges_.emplace_back(a, b); }
  void Name(const std::string& name, NodeId v) { roles_.named[name] = v; }
  int size() const { return static_cast<int>(roles_.node_roles.size()); }

  GeneratedGraph Finish(std::string family, std::vector<NodeId> initial,
                        std::optional<Rational> alpha = std::nullopt) {
    Graph g = Graph::Build(size(), edges_);
    StrategyProfile s = StrategyProfile::FromNodes(size(), initial);
    return {std::move(family), std::move(g), std::move(roles_), std::move(s),
            std::move(alpha)};
  }

 private:
  std::vector<Edge> edges_;
  Roles roles_;
};

// Appends a path of `length` nodes hanging off `anchor`; returns its far end.
NodeId AddPath(Builder& b, NodeId anchor, int length, const std::string& role) {
  NodeId prev = anchor;
  for (int i = 0; i < length; ++i) {
    NodeId x = b.Add(role);
    b.Link(prev, x);
    prev = x;
  }
  return prev;
}

}  // namespace

NodeId Roles::at(const std::string& name) const {
  auto it = named.find(name);
  if (it == named.end()) OutOfRange("unknown role '" + name + "'");
  return it->second;
}

void CheckIrCycleShape(const IrCycleParams& p) {
  if (p.c < 1) OutOfRange("c must be at least 1");
  if (p.c != 1 && (p.n % 4 != 0 || p.c != p.n / 4)) {
    OutOfRange("c must be 1 or n/4 with 4 | n (n=" + std::to_string(p.n) +
               ", c=" + std::to_string(p.c) + ")");
  }
  if (p.r < 0) OutOfRange("r must be non-negative");
  if (p.n - 2 * p.c - p.r - 1 < 0) {
    OutOfRange("n - 2c - r - 1 = " + std::to_string(p.n - 2 * p.c - p.r - 1) +
               " pendants at u is negative");
  }
}

void ValidateIrCycleParams(const IrCycleParams& p) {
  CheckIrCycleShape(p);
  const Rational& a = p.alpha;
  const std::int64_t n = p.n, r = p.r;
  if (p.c == 1) {
    const std::int64_t hi = std::min(n - 1, 2 * r + 2);
    if (!(Rational(r + 2) < a && a < Rational(hi))) {
      OutOfRange("need r+2 < alpha < min{n-1, 2r+2}: " + std::to_string(r + 2) +
                 " < " + Str(a) + " < " + std::to_string(hi) + " fails");
    }
    return;
  }
  if (n <= 16) OutOfRange("c = n/4 requires n > 16");
  const Rational lo = Rational(3 * n * n, 32) + n;
  const Rational hi(5 * n * n, 32);
  if (!(lo < a && a < hi)) {
    OutOfRange("need 3n^2/32+n < alpha < 5n^2/32: " + Str(lo) + " < " +
               Str(a) + " < " + Str(hi) + " fails");
  }
  const Rational r_lo = 2 * a / n - Rational(n, 8) - Rational(1, 2);
  const Rational r_hi = 4 * a / n - Rational(5 * n, 16) - Rational(3, 2);
  if (!(r_lo < r && Rational(r) < r_hi)) {
    OutOfRange("need 2alpha/n-n/8-1/2 < r < 4alpha/n-5n/16-3/2: " +
               Str(r_lo) + " < " + std::to_string(r) + " < " + Str(r_hi) +
               " fails");
  }
}

namespace {

Builder IrCycleBuilder(int n, int c, int r) {
  Builder b;
  NodeId u = b.Add("u");
  b.Name("u", u);
  NodeId prev = u;
  for (int i = 1; i <= 2 * c; ++i) {
    NodeId x = b.Add(i == c ? "v" : i == 2 * c ? "w" : "path");
    b.Link(prev, x);
    prev = x;
  }
  b.Name("v", c);
  b.Name("w", 2 * c);
  for (int i = 0; i < r; ++i) b.Link(2 * c, b.Add("pendant-w"));
  for (int i = 0; i < n - 2 * c - r - 1; ++i) b.Link(u, b.Add("pendant-u"));
  return b;
}

}  // namespace

Graph BuildIrCycleGraph(int n, int c, int r) {
  CheckIrCycleShape({.n = n, .c = c, .r = r});
  Builder b = IrCycleBuilder(n, c, r);
  return b.Finish("ir-cycle", {2 * c}).graph;
}

GeneratedGraph GenIrCycle(const IrCycleParams& p) {
  ValidateIrCycleParams(p);
  Builder b = IrCycleBuilder(p.n, p.c, p.r);
  return b.Finish("ir-cycle", {2 * p.c}, p.alpha);
}

GeneratedGraph GenNonWag(const Rational& alpha, bool experimental) {
  if (alpha != Rational(7) && !experimental) {
    OutOfRange("the non-weakly-acyclic gadget is certified for alpha = 7 only"
               " (got " + Str(alpha) + "); pass the experimental flag");
  }
  if (alpha < 2) OutOfRange("gadget needs alpha >= 2 for non-empty cliques");
  Builder b;
  NodeId u = b.Add("u"), v = b.Add("v"), w = b.Add("w"), c = b.Add("c");
  b.Name("u", u);
  b.Name("v", v);
  b.Name("w", w);
  b.Name("c", c);
  b.Link(u, v);
  b.Link(v, w);
  b.Link(c, v);
  auto clique = [&](std::int64_t size, const std::string& role, NodeId hub) {
    std::vector<NodeId> nodes;
    for (std::int64_t i = 0; i < size; ++i) nodes.push_back(b.Add(role));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        b.Link(nodes[i], nodes[j]);
      }
      b.Link(nodes[i], c);
      b.Link(nodes[i], hub);
    }
  };
  clique(Ceil(alpha / 2), "X", u);
  clique(Floor(alpha / 2), "Y", w);
  return b.Finish("non-wag", {w}, alpha);
}

GeneratedGraph GenSumPoaStar(int n, const Rational& alpha) {
  if (!(alpha >= 4 && alpha <= n - 1)) {
    OutOfRange("star of paths needs 4 <= alpha <= n-1 (n=" +
               std::to_string(n) + ", alpha=" + Str(alpha) + ")");
  }
  const int len = static_cast<int>(FloorSqrt(alpha)) - 1;
  const int k = (n - 1) / len;
  const int rest = n - 1 - k * len;
  Builder b;
  NodeId center = b.Add("center");
  b.Name("u", center);
  NodeId gateway = center;
  for (int i = 0; i < k; ++i) {
    NodeId end = AddPath(b, center, len, "path:" + std::to_string(i));
    if (i == 0) gateway = end;
  }
  if (rest > 0) AddPath(b, center, rest, "path:" + std::to_string(k));
  b.Name("v", gateway);
  return b.Finish("sum-poa-star", {gateway}, alpha);
}

GeneratedGraph GenMaxPoaStar(int n) {
  if (n < 7) OutOfRange("three-path star needs n >= 7");
  const int k = (n - 1) / 3;
  Builder b;
  NodeId center = b.Add("center");
  b.Name("c", center);
  AddPath(b, center, k, "path:0");
  AddPath(b, center, k, "path:1");
  NodeId leaf = AddPath(b, center, n - 2 * k - 1, "path:2");
  b.Name("v", leaf);
  return b.Finish("max-poa-star", {leaf});
}

GeneratedGraph GenMaxLine(const Rational& alpha) {
  if (alpha <= 1) OutOfRange("line construction needs alpha > 1");
  const std::int64_t f = Floor(alpha);
  const int n = static_cast<int>(3 * f + 4);
  Builder b;
  NodeId prev = b.Add("line");
  for (int i = 1; i < n; ++i) {
    NodeId x = b.Add("line");
    b.Link(prev, x);
    prev = x;
  }
  b.Name("u", 0);
  b.Name("v", static_cast<NodeId>(f + 1));
  b.Name("w", static_cast<NodeId>(2 * f + 2));
  return b.Finish("max-line", {0}, alpha);
}

GeneratedGraph GenPath(int n) {
  if (n < 1) OutOfRange("path needs n >= 1");
  Builder b;
  NodeId prev = b.Add("path");
  for (int i = 1; i < n; ++i) {
    NodeId x = b.Add("path");
    b.Link(prev, x);
    prev = x;
  }
  return b.Finish("path", {0});
}

GeneratedGraph GenClique(int n) {
  if (n < 1) OutOfRange("clique needs n >= 1");
  Builder b;
  for (int i = 0; i < n; ++i) b.Add("clique");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) b.Link(i, j);
  }
  return b.Finish("clique", {0});
}

GeneratedGraph GenStar(int n) {
  if (n < 1) OutOfRange("star needs n >= 1");
  Builder b;
  NodeId center = b.Add("center");
  b.Name("c", center);
  for (int i = 1; i < n; ++i) b.Link(center, b.Add("leaf"));
  return b.Finish("star", {center});
}

}  // namespace gateway
