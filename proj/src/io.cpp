#include "stw/io.hpp"

#include <fstream>
#include <sstream>

namespace stw {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // next non-empty, non-comment line; false at EOF
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

std::vector<long long> numbers(const std::string& line, int line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x;
  while (ss >> x) out.push_back(x);
  std::string rest;
  ss.clear();
  if (ss >> rest) throw Error(Errc::Parse, "unexpected token '" + rest + "'", line_no);
  return out;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw Error(Errc::Parse, "empty input", reader.line_no);
  std::istringstream head(line);
  std::string kind;
  head >> kind;

  if (kind == "graph") {
    long long n, m;
    if (!(head >> n >> m)) throw Error(Errc::Parse, "graph header needs <n> <m>", reader.line_no);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order;
    while (reader.next(line)) {
      std::istringstream ss(line);
      std::string first;
      ss >> first;
      if (first == "order") {
        if (!order.empty()) throw Error(Errc::Parse, "duplicate order line", reader.line_no);
        long long v;
        while (ss >> v) order.push_back(static_cast<int>(v));
        if (static_cast<long long>(order.size()) != n)
          throw Error(Errc::Parse, "order line must list n vertices", reader.line_no);
        continue;
      }
      if (static_cast<long long>(edges.size()) >= m)
        throw Error(Errc::Parse, "unexpected trailing line", reader.line_no);
      auto nums = numbers(line, reader.line_no);
      if (nums.size() != 2) throw Error(Errc::Parse, "edge line needs two endpoints", reader.line_no);
      edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    if (static_cast<long long>(edges.size()) < m)
      throw Error(Errc::Parse, "expected " + std::to_string(m) + " edges", reader.line_no);
    try {
      OrderedGraph g = build_ordered_graph(static_cast<int>(n), std::move(edges));
      if (!order.empty()) {
        // the order line lists original vertices left to right
        g = relabel_graph(g, order);
      }
      return g;
    } catch (const Error& e) {
      throw Error(e.code, e.what(), reader.line_no);
    }
  }

  if (kind == "matrix") {
    long long n;
    if (!(head >> n)) throw Error(Errc::Parse, "matrix header needs <n>", reader.line_no);
    SymBitMatrix m = SymBitMatrix::zero(static_cast<int>(n));
    for (int i = 0; i < n; ++i) {
      if (!reader.next(line)) throw Error(Errc::Parse, "expected matrix row", reader.line_no);
      std::string row;
      for (char ch : line)
        if (ch == '0' || ch == '1') row.push_back(ch);
        else if (!isspace(static_cast<unsigned char>(ch)))
          throw Error(Errc::Parse, std::string("bad matrix character '") + ch + "'", reader.line_no);
      if (static_cast<long long>(row.size()) != n)
        throw Error(Errc::Parse, "matrix row needs n entries", reader.line_no);
      for (int j = 0; j < n; ++j)
        if (row[j] == '1') m.rows[i].set(j);
    }
    try {
      m.check_symmetric();
    } catch (const Error& e) {
      throw Error(e.code, e.what(), reader.line_no);
    }
    return m;
  }

  if (kind == "sequence") {
    long long n;
    if (!(head >> n)) throw Error(Errc::Parse, "sequence header needs <n>", reader.line_no);
    PartitionSequence seq;
    PartitionState st(static_cast<int>(n));
    for (long long i = 0; i + 1 < n; ++i) {
      if (!reader.next(line)) throw Error(Errc::Parse, "expected merge line", reader.line_no);
      auto nums = numbers(line, reader.line_no);
      if (nums.size() != 2) throw Error(Errc::Parse, "merge line needs two representatives", reader.line_no);
      try {
        st.merge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
      } catch (const Error& e) {
        throw Error(e.code, std::string(e.what()) + " (merge " + std::to_string(i) + ")",
                    reader.line_no);
      }
      seq.merges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    return seq;
  }

  if (kind == "divisions") {
    long long n;
    if (!(head >> n)) throw Error(Errc::Parse, "divisions header needs <n>", reader.line_no);
    DivisionSequence chain;
    while (reader.next(line)) {
      auto nums = numbers(line, reader.line_no);
      std::vector<int> b(nums.begin(), nums.end());
      try {
        chain.chain.push_back(SymDivision::from_boundaries(static_cast<int>(n), std::move(b)));
      } catch (const Error& e) {
        throw Error(e.code, e.what(), reader.line_no);
      }
    }
    if (chain.chain.empty()) throw Error(Errc::Parse, "divisions file has no divisions", reader.line_no);
    return chain;
  }

  throw Error(Errc::Parse, "unknown instance kind '" + kind + "'", reader.line_no);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return parse_instance(in);
}

OrderedGraph expect_graph(Instance inst) {
  if (auto* g = std::get_if<OrderedGraph>(&inst)) return std::move(*g);
  throw Error(Errc::Parse, "expected a graph instance");
}

SymBitMatrix expect_matrix(Instance inst) {
  if (auto* m = std::get_if<SymBitMatrix>(&inst)) return std::move(*m);
  throw Error(Errc::Parse, "expected a matrix instance");
}

SymBitMatrix expect_matrix_or_graph(Instance inst) {
  if (auto* m = std::get_if<SymBitMatrix>(&inst)) return std::move(*m);
  if (auto* g = std::get_if<OrderedGraph>(&inst)) return adjacency_matrix(*g);
  throw Error(Errc::Parse, "expected a matrix or graph instance");
}

PartitionSequence expect_sequence(Instance inst) {
  if (auto* s = std::get_if<PartitionSequence>(&inst)) return std::move(*s);
  throw Error(Errc::Parse, "expected a sequence instance");
}

DivisionSequence expect_divisions(Instance inst) {
  if (auto* d = std::get_if<DivisionSequence>(&inst)) return std::move(*d);
  throw Error(Errc::Parse, "expected a divisions instance");
}

void emit_graph(std::ostream& out, const OrderedGraph& g, const std::vector<int>* stems) {
  out << "graph " << g.n << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.edge_count(); ++i) {
    out << g.edges[i].first << ' ' << g.edges[i].second << '\n';
  }
  if (stems) {
    for (int i = 0; i < g.edge_count(); ++i)
      if ((*stems)[i] >= 0) out << "# stem " << i << ' ' << (*stems)[i] << '\n';
  }
}

void emit_matrix(std::ostream& out, const SymBitMatrix& m) {
  out << "matrix " << m.n << '\n';
  for (int i = 0; i < m.n; ++i) {
    std::string row(m.n, '0');
    for (int j = 0; j < m.n; ++j)
      if (m.get(i, j)) row[j] = '1';
    out << row << '\n';
  }
}

void emit_sequence(std::ostream& out, int n, const PartitionSequence& seq) {
  out << "sequence " << n << '\n';
  for (auto [a, b] : seq.merges) out << a << ' ' << b << '\n';
}

void emit_divisions(std::ostream& out, int n, const DivisionSequence& chain) {
  out << "divisions " << n << '\n';
  for (const auto& d : chain.chain) {
    for (size_t i = 0; i < d.boundaries.size(); ++i)
      out << (i ? " " : "") << d.boundaries[i];
    out << '\n';
  }
}

std::string to_text(const OrderedGraph& g) {
  std::ostringstream ss;
  emit_graph(ss, g);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace stw
