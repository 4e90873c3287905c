#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "stw/graph.hpp"
#include "stw/matrix.hpp"
#include "stw/separator.hpp"

namespace stw {

using Instance = std::variant<OrderedGraph, SymBitMatrix, PartitionSequence, DivisionSequence>;

// Line-based ASCII formats:
//   graph <n> <m>      then m lines "u v"; an optional "order p0 .. p{n-1}"
//                      line relabels to the identity order at parse time
//   matrix <n>         then n rows of 0/1 characters
//   sequence <n>       then n-1 lines "repA repB"
//   divisions <n>      then one boundary list per line, finest first
// Lines starting with '#' are comments.
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

OrderedGraph expect_graph(Instance inst);
SymBitMatrix expect_matrix(Instance inst);
// graphs are accepted where a matrix is expected, via their adjacency matrix
SymBitMatrix expect_matrix_or_graph(Instance inst);
PartitionSequence expect_sequence(Instance inst);
DivisionSequence expect_divisions(Instance inst);

void emit_graph(std::ostream& out, const OrderedGraph& g,
                const std::vector<int>* stems = nullptr);
void emit_matrix(std::ostream& out, const SymBitMatrix& m);
void emit_sequence(std::ostream& out, int n, const PartitionSequence& seq);
void emit_divisions(std::ostream& out, int n, const DivisionSequence& chain);

std::string to_text(const OrderedGraph& g);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace stw
