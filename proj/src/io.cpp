#include "sgc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace sgc {
namespace {

Error line_error(int line, const std::string& what) {
  return input_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, int line, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw line_error(line, "expected " + what + ", got '" + s + "'");
  }
}

}  // namespace

SignedMultigraph parse_instance(std::istream& in) {
  SignedMultigraph g;
  bool seen_header = false;
  int expected = 0, got = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (!seen_header) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "sg")
        throw line_error(line_no, "expected header 'p sg <n> <m>'");
      g.n = parse_int(t[2], line_no, "vertex count");
      expected = parse_int(t[3], line_no, "edge count");
      if (g.n < 0 || expected < 0)
        throw line_error(line_no, "counts must be nonnegative");
      seen_header = true;
      continue;
    }
    if (t[0] != "e" || t.size() != 4)
      throw line_error(line_no, "expected edge line 'e <u> <v> <+|->'");
    if (got >= expected)
      throw line_error(line_no, "more edges than the header declares");
    int u = parse_int(t[1], line_no, "vertex");
    int v = parse_int(t[2], line_no, "vertex");
    if (u < 1 || u > g.n || v < 1 || v > g.n)
      throw line_error(line_no, "vertex out of range (vertices are 1-indexed)");
    int sign;
    if (t[3] == "+")
      sign = 1;
    else if (t[3] == "-")
      sign = -1;
    else
      throw line_error(line_no, "sign must be '+' or '-'");
    g.add_edge(u - 1, v - 1, sign);
    ++got;
  }
  if (!seen_header) throw input_error("missing 'p sg' header");
  if (got != expected)
    throw input_error("header declares " + std::to_string(expected) +
                      " edges but file has " + std::to_string(got));
  return g;
}

SignedMultigraph parse_instance_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_instance(ss);
}

std::string emit_instance(const SignedMultigraph& g) {
  std::ostringstream out;
  out << "p sg " << g.n << " " << g.edge_count() << "\n";
  for (const auto& e : g.edges)
    out << "e " << e.u + 1 << " " << e.v + 1 << " "
        << (e.sign > 0 ? '+' : '-') << "\n";
  return out.str();
}

namespace {

// Splits a cover line into tokens with brackets and parens standalone.
std::vector<std::string> cover_tokens(const std::string& line) {
  std::string spaced;
  for (char c : line) {
    if (c == '[' || c == ']' || c == '(' || c == ')') {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  return tokens(spaced);
}

int edge_token(const SignedMultigraph& g, const std::string& t, int line) {
  if (t.size() < 2 || t[0] != 'e')
    throw line_error(line, "expected edge token 'e<id>', got '" + t + "'");
  int id = parse_int(t.substr(1), line, "edge id");
  if (id < 0 || id >= g.edge_count())
    throw line_error(line, "edge id out of range: " + t);
  return id;
}

// Reads `[ e.. e.. ]` starting at pos; returns the circuit.
Circuit bracket_circuit(const SignedMultigraph& g,
                        const std::vector<std::string>& t, size_t& pos,
                        int line) {
  if (pos >= t.size() || t[pos] != "[")
    throw line_error(line, "expected '['");
  ++pos;
  std::vector<int> ids;
  while (pos < t.size() && t[pos] != "]") ids.push_back(edge_token(g, t[pos++], line));
  if (pos >= t.size()) throw line_error(line, "missing ']'");
  ++pos;
  if (ids.empty()) throw line_error(line, "empty circuit");
  try {
    return make_circuit_from_edges(g, ids);
  } catch (const Error& err) {
    throw line_error(line, err.what());
  }
}

SignedCircuit parse_member(const SignedMultigraph& g, const std::string& line,
                           int line_no) {
  auto t = cover_tokens(line);
  if (t.empty()) throw line_error(line_no, "empty member");
  const std::string& kind = t[0];
  size_t pos = 1;
  if (kind == "balanced:") {
    std::vector<int> ids;
    while (pos < t.size()) ids.push_back(edge_token(g, t[pos++], line_no));
    if (ids.empty()) throw line_error(line_no, "empty circuit");
    try {
      return balanced_circuit(make_circuit_from_edges(g, ids));
    } catch (const Error& err) {
      throw line_error(line_no, err.what());
    }
  }
  if (kind == "short:") {
    Circuit c1 = bracket_circuit(g, t, pos, line_no);
    if (pos >= t.size() || t[pos].rfind("@v", 0) != 0)
      throw line_error(line_no, "expected joint token '@v<id>'");
    int joint = parse_int(t[pos].substr(2), line_no, "joint vertex") - 1;
    ++pos;
    Circuit c2 = bracket_circuit(g, t, pos, line_no);
    if (pos != t.size()) throw line_error(line_no, "trailing tokens");
    return short_barbell(c1, c2, joint);
  }
  if (kind == "long:") {
    Circuit c1 = bracket_circuit(g, t, pos, line_no);
    if (pos >= t.size() || t[pos] != "(")
      throw line_error(line_no, "expected '('");
    ++pos;
    std::vector<int> pe;
    while (pos < t.size() && t[pos] != ")")
      pe.push_back(edge_token(g, t[pos++], line_no));
    if (pos >= t.size()) throw line_error(line_no, "missing ')'");
    ++pos;
    Circuit c2 = bracket_circuit(g, t, pos, line_no);
    if (pos != t.size()) throw line_error(line_no, "trailing tokens");
    if (pe.empty()) throw line_error(line_no, "long barbell needs a path");

    // Rebuild the vertex chain of the path from its edge order.
    std::vector<int> pv;
    if (pe.size() == 1) {
      pv = {g.edge(pe[0]).u, g.edge(pe[0]).v};
    } else {
      const auto& e0 = g.edge(pe[0]);
      const auto& e1 = g.edge(pe[1]);
      int shared = (e0.u == e1.u || e0.u == e1.v) ? e0.u : e0.v;
      pv.push_back(g.other_end(pe[0], shared));
      pv.push_back(shared);
      for (size_t i = 1; i < pe.size(); ++i)
        pv.push_back(g.other_end(pe[i], pv.back()));
    }
    auto on = [&](const Circuit& c, int v) {
      return std::find(c.verts.begin(), c.verts.end(), v) != c.verts.end();
    };
    if (!on(c1, pv.front())) {
      std::reverse(pe.begin(), pe.end());
      std::reverse(pv.begin(), pv.end());
    }
    if (!on(c1, pv.front()) || !on(c2, pv.back()))
      throw line_error(line_no, "path does not join the two circuits");
    return long_barbell(c1, c2, pe, pv);
  }
  throw line_error(line_no,
                   "unknown member kind '" + kind +
                       "' (expected balanced:, short:, long:)");
}

}  // namespace

CoverFamily parse_cover(const SignedMultigraph& g, std::istream& in) {
  CoverFamily f;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    f.members.push_back(parse_member(g, line, line_no));
  }
  return f;
}

CoverFamily parse_cover_text(const SignedMultigraph& g,
                             const std::string& text) {
  std::istringstream ss(text);
  return parse_cover(g, ss);
}

std::string emit_cover(const CoverFamily& f) {
  std::ostringstream out;
  auto circuit = [&](const Circuit& c) {
    std::string s;
    for (size_t i = 0; i < c.edges.size(); ++i) {
      if (i) s += ' ';
      s += 'e' + std::to_string(c.edges[i]);
    }
    return s;
  };
  for (const auto& m : f.members) {
    switch (m.kind) {
      case SignedCircuit::Kind::Balanced:
        out << "balanced: " << circuit(m.c1) << "\n";
        break;
      case SignedCircuit::Kind::ShortBarbell:
        out << "short: [" << circuit(m.c1) << "] @v" << m.joint + 1 << " ["
            << circuit(m.c2) << "]\n";
        break;
      case SignedCircuit::Kind::LongBarbell: {
        out << "long: [" << circuit(m.c1) << "] (";
        for (size_t i = 0; i < m.path_edges.size(); ++i) {
          if (i) out << ' ';
          out << 'e' << m.path_edges[i];
        }
        out << ") [" << circuit(m.c2) << "]\n";
        break;
      }
    }
  }
  return out.str();
}

SignedMultigraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_instance(in);
}

CoverFamily load_cover(const SignedMultigraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_cover(g, in);
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open " + path + " for writing");
  out << text;
}

}  // namespace sgc
