#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qrd/tuples.hpp"

namespace qrd {

// Staircase array: rows of s points, row i+1 shifted gaps[i] units right.
struct OverlapDiagram {
  int s = 2;
  std::vector<long long> gaps;  // all >= 1

  int rows() const { return static_cast<int>(gaps.size()) + 1; }
};

// 1-based inclusive row interval of a block.
struct RowInterval {
  int first = 0;
  int last = 0;
  friend bool operator==(const RowInterval& a, const RowInterval& b) {
    return a.first == b.first && a.last == b.last;
  }
};

// Maximal row intervals in which consecutive rows overlap: runs of gap
// indices with gap <= s-1, extended by one row.  Empty iff every gap >= s.
std::vector<RowInterval> blocks_of(const OverlapDiagram& diagram);

// Rows labeled by the ascending rationals of one partition class; when there
// are at least two rows every gap is <= s-1, so the diagram is one block.
struct BlockDiagram {
  std::vector<Rational> labels;
  int s = 2;
  std::vector<long long> gaps;  // consecutive label differences (integers)
};

// Vertical fiber of a block diagram: the entries (label, offset) share the
// common sum t = label + offset.
struct Column {
  Rational t;
  std::vector<std::pair<Rational, int>> entries;
  std::set<int> K;       // indices i with Q_i meeting the labels of the column
  std::set<Int> values;  // square-free parts sigma_i over i in K
  bool essential = false;  // at least two distinct values
};

// Partition of the point set Q: split into integer-shift classes, then into
// maximal runs with consecutive distances <= s-1.  Each part is returned in
// ascending order; parts are ordered by first element.
std::vector<std::vector<Rational>> r_partition(const std::set<Rational>& Q, int s);

BlockDiagram block_diagram_of(const std::vector<Rational>& R, int s);

// One column per value of label+offset, in ascending t order.
std::vector<Column> columns_of(const BlockDiagram& block, const TupleStructure& st);

struct QuotientBlock {
  BlockDiagram diagram;
  std::vector<Column> columns;
  std::set<int> D;  // indices i with Q_i meeting the block's labels
};

// The blocks whose columns witness a multi-index intersection (some
// |K(C)| >= 2).  May be empty.
struct QuotientDiagram {
  int s = 2;
  std::vector<QuotientBlock> blocks;
};

QuotientDiagram quotient_diagram(const TupleStructure& st);

// {K(C)} over the columns of every partition class; equals kmax_direct.
KMaxFamily kmax_via_columns(const TupleStructure& st);

// Maximal run of adjacent essential columns linked by rows whose label
// belongs to some Q_i with i in Sigma.
struct Cell {
  std::vector<std::size_t> column_index;  // positions in the block's essential list
  std::set<Rational> labels;              // union of the column label sets
  std::set<int> indices;                  // indices i with Q_i meeting the labels
  std::set<int> sigma_indices;            // the same, restricted to Sigma
};

struct ReducedBlock {
  std::size_t block_index = 0;            // position in the quotient diagram
  std::vector<Column> essential;          // essential columns, ascending t
  std::vector<Column> non_essential;      // side list for diagnostics
  std::vector<Cell> cells;
};

struct CellDecomposition {
  std::vector<ReducedBlock> blocks;  // blocks with at least one essential column

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.cells.size();
    return n;
  }
};

CellDecomposition essential_and_cells(const QuotientDiagram& qd,
                                      const TupleStructure& st,
                                      const std::set<int>& Sigma);

// Dot-grid rendering, one grid per block, stable enough for golden files.
std::string render_ascii(const OverlapDiagram& diagram);
std::string render_ascii(const QuotientDiagram& qd);

}  // namespace qrd
