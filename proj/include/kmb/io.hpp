// Copyright 2026 The Authors.
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
//
// Text formats. Ids are 1-based on disk and 0-based in memory.
//
// k-Median instance:
//   kmedian <num_centers> <num_customers> <num_edges> <k>
//   <center_id> <customer_id> <cost>          (num_edges lines)
//
// Set Cover system:
//   setcover <num_sets> <num_elements> <k>
//   <set_id> <element_id>                     (until EOF)
//
// Fractional solution:
//   frac <num_centers> <num_customers>
//   x <center_id> <value>
//   y <center_id> <customer_id> <value>       (x/y lines until EOF)

#ifndef KMB_IO_HPP_
#define KMB_IO_HPP_

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kmb/instance.hpp"
#include "kmb/sampling.hpp"

namespace kmb {

struct SetCoverProblem {
  std::vector<std::vector<int>> sets;  // element ids per set
  int num_elements = 0;
  int k = 0;
};

namespace detail {

struct LineScanner {
  std::istream& in;
  int line_no = 0;
  std::istringstream cur;

  explicit LineScanner(std::istream& s) : in(s) {}

  // Advances to the next non-blank line; returns false at EOF.
  bool next_line() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        cur.clear();
        cur.str(line);
        return true;
      }
    }
    return false;
  }

  [[noreturn]] void die(const std::string& msg) const {
    fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + msg);
  }

  std::string word(const char* what) {
    std::string tok;
    if (!(cur >> tok)) die(std::string("expected ") + what);
    return tok;
  }

  long long integer(const char* what) {
    std::string tok = word(what);
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      die(std::string("expected integer ") + what + ", got '" + tok + "'");
    }
    return v;
  }

  double number(const char* what) {
    std::string tok = word(what);
    try {
      std::size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      die(std::string("expected number ") + what + ", got '" + tok + "'");
    }
  }

  void expect_end() {
    std::string tok;
    if (cur >> tok) die("unexpected trailing token '" + tok + "'");
  }
};

}  // namespace detail

inline Instance read_instance(std::istream& in) {
  detail::LineScanner sc(in);
  if (!sc.next_line()) fail(Errc::parse_error, "line 1: empty input");
  std::string magic = sc.word("format tag");
  if (magic != "kmedian") sc.die("expected 'kmedian' header, got '" + magic + "'");
  long long nc = sc.integer("num_centers");
  long long nw = sc.integer("num_customers");
  long long m = sc.integer("num_edges");
  long long k = sc.integer("k");
  sc.expect_end();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::max<long long>(m, 0)));
  for (long long t = 0; t < m; ++t) {
    if (!sc.next_line()) {
      fail(Errc::parse_error, "line " + std::to_string(sc.line_no) +
                                  ": expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(t));
    }
    int i = static_cast<int>(sc.integer("center id"));
    int j = static_cast<int>(sc.integer("customer id"));
    double c = sc.number("cost");
    sc.expect_end();
    if (c < 0.0) sc.die("cost must be nonnegative");
    edges.push_back(Edge{i - 1, j - 1, c});
  }
  if (sc.next_line()) sc.die("unexpected content after the last edge");
  return Instance(static_cast<int>(nc), static_cast<int>(nw),
                  static_cast<int>(k), std::move(edges));
}

inline void write_instance(std::ostream& out, const Instance& inst) {
  out << "kmedian " << inst.num_centers() << ' ' << inst.num_customers() << ' '
      << inst.num_edges() << ' ' << inst.k() << '\n';
  std::ostringstream buf;
  buf.precision(17);
  for (const Edge& e : inst.edges()) {
    buf << (e.center + 1) << ' ' << (e.customer + 1) << ' ' << e.cost << '\n';
  }
  out << buf.str();
}

inline SetCoverProblem read_setcover(std::istream& in) {
  detail::LineScanner sc(in);
  if (!sc.next_line()) fail(Errc::parse_error, "line 1: empty input");
  std::string magic = sc.word("format tag");
  if (magic != "setcover") sc.die("expected 'setcover' header, got '" + magic + "'");
  long long ns = sc.integer("num_sets");
  long long ne = sc.integer("num_elements");
  long long k = sc.integer("k");
  sc.expect_end();
  SetCoverProblem p;
  p.sets.assign(static_cast<std::size_t>(std::max<long long>(ns, 0)), {});
  p.num_elements = static_cast<int>(ne);
  p.k = static_cast<int>(k);
  while (sc.next_line()) {
    long long s = sc.integer("set id");
    long long e = sc.integer("element id");
    sc.expect_end();
    if (s < 1 || s > ns) sc.die("set id out of range");
    if (e < 1 || e > ne) sc.die("element id out of range");
    p.sets[static_cast<std::size_t>(s - 1)].push_back(static_cast<int>(e - 1));
  }
  return p;
}

inline void write_setcover(std::ostream& out, const SetCoverProblem& p) {
  out << "setcover " << p.sets.size() << ' ' << p.num_elements << ' ' << p.k
      << '\n';
  for (std::size_t s = 0; s < p.sets.size(); ++s) {
    for (int e : p.sets[s]) out << (s + 1) << ' ' << (e + 1) << '\n';
  }
}

/// Converts a zero-cost instance back into a Set Cover system. Fails unless
/// every edge has cost exactly zero.
inline SetCoverProblem to_setcover(const Instance& inst) {
  SetCoverProblem p;
  p.sets.assign(static_cast<std::size_t>(inst.num_centers()), {});
  p.num_elements = inst.num_customers();
  p.k = inst.k();
  for (const Edge& e : inst.edges()) {
    if (e.cost != 0.0) {
      fail(Errc::bad_parameters,
           "instance has a nonzero cost edge; not a Set Cover encoding");
    }
    p.sets[static_cast<std::size_t>(e.center)].push_back(e.customer);
  }
  return p;
}

inline FractionalSolution read_fractional(std::istream& in) {
  detail::LineScanner sc(in);
  if (!sc.next_line()) fail(Errc::parse_error, "line 1: empty input");
  std::string magic = sc.word("format tag");
  if (magic != "frac") sc.die("expected 'frac' header, got '" + magic + "'");
  long long nc = sc.integer("num_centers");
  sc.integer("num_customers");
  sc.expect_end();
  FractionalSolution f;
  f.x.assign(static_cast<std::size_t>(std::max<long long>(nc, 0)), 0.0);
  while (sc.next_line()) {
    std::string tag = sc.word("'x' or 'y'");
    if (tag == "x") {
      long long i = sc.integer("center id");
      double v = sc.number("value");
      sc.expect_end();
      if (i < 1 || i > nc) sc.die("center id out of range");
      f.x[static_cast<std::size_t>(i - 1)] = v;
    } else if (tag == "y") {
      long long i = sc.integer("center id");
      long long j = sc.integer("customer id");
      double v = sc.number("value");
      sc.expect_end();
      if (i < 1 || i > nc) sc.die("center id out of range");
      f.y.push_back(FractionalEntry{static_cast<int>(i - 1),
                                    static_cast<int>(j - 1), v});
    } else {
      sc.die("expected 'x' or 'y', got '" + tag + "'");
    }
  }
  f.sort_entries();
  return f;
}

inline void write_fractional(std::ostream& out, const FractionalSolution& f,
                             int num_customers) {
  out << "frac " << f.x.size() << ' ' << num_customers << '\n';
  std::ostringstream buf;
  buf.precision(17);
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    if (f.x[i] != 0.0) buf << "x " << (i + 1) << ' ' << f.x[i] << '\n';
  }
  for (const FractionalEntry& e : f.y) {
    buf << "y " << (e.center + 1) << ' ' << (e.customer + 1) << ' ' << e.value
        << '\n';
  }
  out << buf.str();
}

template <typename T, typename Reader>
T read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open '" + path + "'");
  return reader(in);
}

inline Instance read_instance_file(const std::string& path) {
  return read_file<Instance>(path, [](std::istream& s) { return read_instance(s); });
}

}  // namespace kmb

#endif  // KMB_IO_HPP_
