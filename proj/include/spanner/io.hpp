#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spanner/errors.hpp"
#include "spanner/graph.hpp"

namespace spanner {
namespace detail {

inline std::string_view trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct LineReader {
  std::string_view text;
  size_t pos = 0;
  int line_no = 0;

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    size_t nl = text.find('\n', pos);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    out = text.substr(pos, end - pos);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    pos = end + 1;
    ++line_no;
    return true;
  }
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_i64(std::string_view s, int64_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline bool parse_f64(std::string_view s, double& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline bool eq_icase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::toupper((unsigned char)a[i]) != std::toupper((unsigned char)b[i])) return false;
  return true;
}

}  // namespace detail

// Shortest decimal that round-trips; integers come out bare ("3", not "3.0").
inline std::string format_number(double x) {
  if (x == int64_t(x) && std::abs(x) < 9.0e15) return std::to_string(int64_t(x));
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

// ---------------------------------------------------------------------------
// Native format: "n m weighted" header, one "u v [w]" line per edge, LF ends.
// ---------------------------------------------------------------------------

inline std::string write_graph(const Graph& g) {
  std::string out;
  out += std::to_string(g.n());
  out += ' ';
  out += std::to_string(g.m());
  out += g.weighted() ? " 1\n" : " 0\n";
  for (int32_t e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    out += std::to_string(ed.u);
    out += ' ';
    out += std::to_string(ed.v);
    if (g.weighted()) {
      out += ' ';
      out += format_number(ed.w);
    }
    out += '\n';
  }
  return out;
}

inline Graph parse_graph(std::string_view text) {
  detail::LineReader lines{text};
  std::string_view line;
  auto next_payload = [&]() -> bool {
    while (lines.next(line)) {
      line = detail::trim(line);
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_payload()) throw ParseError("empty graph file");
  auto head = detail::split_ws(line);
  int64_t n, m, wf;
  if (head.size() != 3 || !detail::parse_i64(head[0], n) || !detail::parse_i64(head[1], m) ||
      !detail::parse_i64(head[2], wf) || (wf != 0 && wf != 1))
    throw ParseError("expected header \"n m weighted\"", lines.line_no);
  bool weighted = wf == 1;
  std::vector<Edge> edges;
  edges.reserve(size_t(m));
  while (int64_t(edges.size()) < m) {
    if (!next_payload())
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                           std::to_string(edges.size()),
                       lines.line_no);
    auto tok = detail::split_ws(line);
    int64_t u, v;
    double w = 1.0;
    bool ok = tok.size() == (weighted ? 3u : 2u) && detail::parse_i64(tok[0], u) &&
              detail::parse_i64(tok[1], v) && (!weighted || detail::parse_f64(tok[2], w));
    if (!ok) throw ParseError("bad edge line", lines.line_no);
    edges.push_back({int32_t(u), int32_t(v), w});
  }
  if (next_payload()) throw ParseError("trailing content after edge list", lines.line_no);
  try {
    return Graph(int32_t(n), edges, weighted);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// SteinLib STP 1.0: only SECTION Graph matters; terminals etc. are skipped.
// ---------------------------------------------------------------------------

inline Graph parse_stp(std::string_view text) {
  using detail::eq_icase;
  detail::LineReader lines{text};
  std::string_view line;
  int64_t n = -1, m = -1;
  std::vector<Edge> edges;
  bool in_graph = false, seen_graph = false;
  while (lines.next(line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto tok = detail::split_ws(line);
    if (!in_graph) {
      if (tok.size() >= 2 && eq_icase(tok[0], "SECTION") && eq_icase(tok[1], "Graph")) {
        if (seen_graph) throw ParseError("duplicate graph section", lines.line_no);
        in_graph = seen_graph = true;
      }
      continue;
    }
    if (eq_icase(tok[0], "END")) {
      in_graph = false;
      continue;
    }
    if (eq_icase(tok[0], "Nodes")) {
      if (tok.size() != 2 || !detail::parse_i64(tok[1], n))
        throw ParseError("bad Nodes line", lines.line_no);
    } else if (eq_icase(tok[0], "Edges")) {
      if (tok.size() != 2 || !detail::parse_i64(tok[1], m))
        throw ParseError("bad Edges line", lines.line_no);
    } else if (eq_icase(tok[0], "E")) {
      int64_t u, v;
      double w;
      if (tok.size() != 4 || !detail::parse_i64(tok[1], u) || !detail::parse_i64(tok[2], v) ||
          !detail::parse_f64(tok[3], w))
        throw ParseError("bad edge line", lines.line_no);
      edges.push_back({int32_t(u - 1), int32_t(v - 1), w});
    } else {
      throw ParseError("unexpected token in graph section", lines.line_no);
    }
  }
  if (!seen_graph || in_graph) throw ParseError("missing or unterminated graph section");
  if (n < 0 || m < 0) throw ParseError("graph section lacks Nodes/Edges counts");
  if (int64_t(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph(int32_t(n), edges, true);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// TSPLIB (symmetric subset): EUC_2D, CEIL_2D, and EXPLICIT with FULL_MATRIX /
// UPPER_ROW / LOWER_DIAG_ROW. Produces the complete graph on DIMENSION nodes.
// ---------------------------------------------------------------------------

inline Graph parse_tsplib(std::string_view text) {
  using detail::eq_icase;
  detail::LineReader lines{text};
  std::string_view line;
  int64_t dim = -1;
  std::string wtype, wformat;
  std::vector<double> xs, ys, matrix;
  bool have_coords = false;

  auto header_value = [](std::string_view l) -> std::string_view {
    size_t c = l.find(':');
    return c == std::string_view::npos ? std::string_view{} : detail::trim(l.substr(c + 1));
  };

  while (lines.next(line)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    auto tok = detail::split_ws(line);
    std::string_view key = tok[0];
    size_t c = key.find(':');
    if (c != std::string_view::npos) key = key.substr(0, c);
    if (eq_icase(key, "DIMENSION")) {
      if (!detail::parse_i64(header_value(line), dim) &&
          !(tok.size() >= 3 && detail::parse_i64(tok.back(), dim)))
        throw ParseError("bad DIMENSION", lines.line_no);
    } else if (eq_icase(key, "EDGE_WEIGHT_TYPE")) {
      wtype = std::string(header_value(line));
      if (wtype.empty() && tok.size() >= 2) wtype = std::string(tok.back());
    } else if (eq_icase(key, "EDGE_WEIGHT_FORMAT")) {
      wformat = std::string(header_value(line));
      if (wformat.empty() && tok.size() >= 2) wformat = std::string(tok.back());
    } else if (eq_icase(key, "NODE_COORD_SECTION")) {
      if (dim <= 0) throw ParseError("NODE_COORD_SECTION before DIMENSION", lines.line_no);
      xs.assign(size_t(dim), 0.0);
      ys.assign(size_t(dim), 0.0);
      for (int64_t i = 0; i < dim; ++i) {
        if (!lines.next(line)) throw ParseError("truncated coordinates", lines.line_no);
        auto ct = detail::split_ws(detail::trim(line));
        int64_t id;
        double x, y;
        if (ct.size() != 3 || !detail::parse_i64(ct[0], id) || !detail::parse_f64(ct[1], x) ||
            !detail::parse_f64(ct[2], y) || id < 1 || id > dim)
          throw ParseError("bad coordinate line", lines.line_no);
        xs[size_t(id - 1)] = x;
        ys[size_t(id - 1)] = y;
      }
      have_coords = true;
    } else if (eq_icase(key, "EDGE_WEIGHT_SECTION")) {
      // free-form token stream until a non-numeric line
      while (lines.next(line)) {
        auto wt = detail::split_ws(detail::trim(line));
        if (wt.empty()) continue;
        double v;
        if (!detail::parse_f64(wt[0], v)) break;  // next section keyword
        for (auto t : wt) {
          if (!detail::parse_f64(t, v)) throw ParseError("bad weight token", lines.line_no);
          matrix.push_back(v);
        }
      }
    }
    if (eq_icase(detail::trim(line), "EOF")) break;
  }

  if (dim <= 0) throw ParseError("missing DIMENSION");
  bool euc = eq_icase(wtype, "EUC_2D"), ceil2d = eq_icase(wtype, "CEIL_2D");
  bool expl = eq_icase(wtype, "EXPLICIT");
  if (!euc && !ceil2d && !expl)
    throw ParseError("unsupported edge weight type: " + wtype);

  auto weight_at = [&](int32_t i, int32_t j) -> double {  // i < j
    if (euc || ceil2d) {
      double dx = xs[size_t(i)] - xs[size_t(j)], dy = ys[size_t(i)] - ys[size_t(j)];
      double d = std::sqrt(dx * dx + dy * dy);
      return euc ? std::floor(d + 0.5) : std::ceil(d);
    }
    int64_t n = dim;
    if (eq_icase(wformat, "FULL_MATRIX")) return matrix.at(size_t(i * n + j));
    if (eq_icase(wformat, "UPPER_ROW")) {
      // row i holds entries (i, i+1..n-1)
      int64_t base = int64_t(i) * (2 * n - i - 1) / 2;
      return matrix.at(size_t(base + (j - i - 1)));
    }
    if (eq_icase(wformat, "LOWER_DIAG_ROW")) {
      // row j holds entries (j, 0..j); want (j, i)
      int64_t base = int64_t(j) * (j + 1) / 2;
      return matrix.at(size_t(base + i));
    }
    throw ParseError("unsupported edge weight format: " + wformat);
  };
  if ((euc || ceil2d) && !have_coords) throw ParseError("missing NODE_COORD_SECTION");
  if (expl) {
    size_t need = eq_icase(wformat, "FULL_MATRIX")      ? size_t(dim) * size_t(dim)
                  : eq_icase(wformat, "UPPER_ROW")      ? size_t(dim) * size_t(dim - 1) / 2
                  : eq_icase(wformat, "LOWER_DIAG_ROW") ? size_t(dim) * size_t(dim + 1) / 2
                                                        : 0;
    if (need == 0) throw ParseError("unsupported edge weight format: " + wformat);
    if (matrix.size() != need)
      throw ParseError("weight section holds " + std::to_string(matrix.size()) +
                       " entries, expected " + std::to_string(need));
  }

  std::vector<Edge> edges;
  edges.reserve(size_t(dim) * size_t(dim - 1) / 2);
  for (int32_t i = 0; i < dim; ++i) {
    for (int32_t j = i + 1; j < dim; ++j) {
      double w = weight_at(i, j);
      if (w <= 0.0)
        throw ParseError("zero-weight edge (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
      edges.push_back({i, j, w});
    }
  }
  try {
    return Graph(int32_t(dim), edges, true);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Spanner files: "alpha <value>", "edges <k>", then one "u v" line per edge.
// ---------------------------------------------------------------------------

inline std::string write_spanner(const Spanner& h) {
  std::string out = "alpha " + format_number(h.alpha()) + "\n";
  auto ids = h.edge_ids();
  out += "edges " + std::to_string(ids.size()) + "\n";
  for (int32_t e : ids) {
    const Edge& ed = h.parent().edge(e);
    out += std::to_string(ed.u);
    out += ' ';
    out += std::to_string(ed.v);
    out += '\n';
  }
  return out;
}

inline Spanner parse_spanner(std::string_view text, const Graph& parent) {
  detail::LineReader lines{text};
  std::string_view line;
  auto next_payload = [&]() -> bool {
    while (lines.next(line)) {
      line = detail::trim(line);
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };
  double alpha;
  if (!next_payload()) throw ParseError("empty spanner file");
  auto t1 = detail::split_ws(line);
  if (t1.size() != 2 || t1[0] != "alpha" || !detail::parse_f64(t1[1], alpha))
    throw ParseError("expected \"alpha <value>\"", lines.line_no);
  if (!next_payload()) throw ParseError("missing edge count", lines.line_no);
  auto t2 = detail::split_ws(line);
  int64_t k;
  if (t2.size() != 2 || t2[0] != "edges" || !detail::parse_i64(t2[1], k) || k < 0)
    throw ParseError("expected \"edges <count>\"", lines.line_no);

  std::unordered_map<int64_t, int32_t> lookup;
  lookup.reserve(size_t(parent.m()) * 2);
  for (int32_t e = 0; e < parent.m(); ++e) {
    const Edge& ed = parent.edge(e);
    lookup.emplace(int64_t(ed.u) * parent.n() + ed.v, e);
  }
  Spanner h = Spanner::empty(parent, alpha);
  for (int64_t i = 0; i < k; ++i) {
    if (!next_payload()) throw ParseError("expected " + std::to_string(k) + " edges", lines.line_no);
    auto tok = detail::split_ws(line);
    int64_t u, v;
    if (tok.size() != 2 || !detail::parse_i64(tok[0], u) || !detail::parse_i64(tok[1], v))
      throw ParseError("bad edge line", lines.line_no);
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= parent.n()) throw ParseError("vertex out of range", lines.line_no);
    auto it = lookup.find(u * parent.n() + v);
    if (it == lookup.end()) throw ParseError("edge not present in parent graph", lines.line_no);
    if (h.contains(it->second)) throw ParseError("duplicate edge", lines.line_no);
    h.add(it->second);
  }
  if (next_payload()) throw ParseError("trailing content after edge list", lines.line_no);
  return h;
}

// ---------------------------------------------------------------------------
// Whole-file helpers.
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw IoError("cannot write " + path);
}

// Loads by extension: .stp and .tsp get their dedicated parsers, anything
// else is treated as the native format.
inline Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".stp") return parse_stp(text);
  if (ext == ".tsp") return parse_tsplib(text);
  return parse_graph(text);
}

}  // namespace spanner
