#include "chromadia/gio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chromadia {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Err::ParseError, "malformed JSON");
  if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"] != 1))
    throw Error(Err::ParseError, "unsupported schema");
  return j;
}

std::vector<int> int_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(Err::ParseError, std::string(key) + " missing or not an array");
  std::vector<int> out;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer())
      throw Error(Err::ParseError, std::string(key) + " contains a non-integer");
    out.push_back(x.get<int>());
  }
  return out;
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(Err::ParseError, std::string(key) + " missing or not an integer");
  return j[key].get<int>();
}

}  // namespace

Graph read_graph6(const std::string& line) {
  const unsigned char* p = reinterpret_cast<const unsigned char*>(line.data());
  size_t len = line.size();
  for (size_t i = 0; i < len; ++i)
    if (p[i] < 63 || p[i] > 126)
      throw Error(Err::ParseError, "graph6: byte outside printable range");
  size_t at = 0;
  long long n;
  if (len == 0) throw Error(Err::ParseError, "graph6: empty line");
  if (p[0] != 126) {
    n = p[0] - 63;
    at = 1;
  } else {
    if (len >= 2 && p[1] == 126)
      throw Error(Err::ParseError, "graph6: order beyond supported range");
    if (len < 4) throw Error(Err::ParseError, "graph6: truncated order");
    n = ((long long)(p[1] - 63) << 12) | ((long long)(p[2] - 63) << 6) |
        (long long)(p[3] - 63);
    if (n < 63) throw Error(Err::ParseError, "graph6: non-canonical long order");
    at = 4;
  }
  long long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (len - at != need) throw Error(Err::ParseError, "graph6: wrong body length");
  std::vector<std::pair<int, int>> edges;
  long long idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx) {
      int byte = p[at + idx / 6] - 63;
      if ((byte >> (5 - idx % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits beyond the triangle must be zero.
  for (long long t = bits; t < static_cast<long long>(need) * 6; ++t) {
    int byte = p[at + t / 6] - 63;
    if ((byte >> (5 - t % 6)) & 1)
      throw Error(Err::ParseError, "graph6: nonzero padding");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  long long bits = (long long)n * (n - 1) / 2;
  std::vector<int> groups((bits + 5) / 6, 0);
  long long idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (g.has_edge(i, j)) groups[idx / 6] |= 1 << (5 - idx % 6);
  for (int grp : groups) out.push_back(static_cast<char>(grp + 63));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(read_graph6(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& gs) {
  std::ofstream out(path);
  if (!out) throw Error(Err::ParseError, "cannot open " + path + " for writing");
  for (const auto& g : gs) out << write_graph6(g) << '\n';
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw Error(Err::ParseError, "edge list: missing n m header");
  if (n < 0 || m < 0) throw Error(Err::ParseError, "edge list: negative count");
  std::vector<std::pair<int, int>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw Error(Err::ParseError, "edge list: expected " + std::to_string(m) +
                                       " edges, found " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string tail;
  if (in >> tail) throw Error(Err::ParseError, "edge list: trailing tokens");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Err::ParseError, "cannot open " + path + " for writing");
  out << text;
}

Graph load_graph_file(const std::string& path) {
  auto ends_with = [&](const std::string& suf) {
    return path.size() >= suf.size() &&
           path.compare(path.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with(".g6")) {
    auto gs = read_graph6_file(path);
    if (gs.empty()) throw Error(Err::ParseError, path + ": no graphs");
    if (gs.size() > 1)
      throw Error(Err::ParseError, path + ": holds " + std::to_string(gs.size()) +
                                       " graphs where one is expected");
    return gs.front();
  }
  return read_edge_list(read_text_file(path));
}

std::string colouring_to_json(const VertexColouring& c) {
  json j;
  j["schema"] = 1;
  j["k"] = c.k;
  j["colors"] = c.colors;
  return j.dump();
}

VertexColouring colouring_from_json(const std::string& text) {
  json j = parse_json(text);
  VertexColouring c;
  c.k = int_field(j, "k");
  c.colors = int_array(j, "colors");
  return c;
}

std::string labelling_to_json(const Labelling& lab) {
  json j;
  j["schema"] = 1;
  j["a1"] = lab.a1;
  j["a2"] = lab.a2;
  j["k"] = lab.k;
  j["labels"] = lab.labels;
  return j.dump();
}

Labelling labelling_from_json(const std::string& text) {
  json j = parse_json(text);
  Labelling lab;
  lab.a1 = int_field(j, "a1");
  lab.a2 = int_field(j, "a2");
  lab.k = int_field(j, "k");
  lab.labels = int_array(j, "labels");
  return lab;
}

std::string lists_to_json(const std::vector<std::vector<int>>& lists) {
  json j;
  j["schema"] = 1;
  j["lists"] = lists;
  return j.dump();
}

std::vector<std::vector<int>> lists_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("lists") || !j["lists"].is_array())
    throw Error(Err::ParseError, "lists missing or not an array");
  std::vector<std::vector<int>> out;
  for (const auto& row : j["lists"]) {
    if (!row.is_array()) throw Error(Err::ParseError, "list entry not an array");
    std::vector<int> lst;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw Error(Err::ParseError, "list entry contains a non-integer");
      lst.push_back(x.get<int>());
    }
    out.push_back(std::move(lst));
  }
  return out;
}

}  // namespace chromadia
