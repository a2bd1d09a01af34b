#include "qrd/diagrams.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qrd/errors.hpp"

namespace qrd {

std::vector<RowInterval> blocks_of(const OverlapDiagram& diagram) {
  for (long long g : diagram.gaps)
    if (g < 1) throw domain_error("blocks_of: gaps must be positive");
  std::vector<RowInterval> out;
  int n = static_cast<int>(diagram.gaps.size());
  int i = 1;
  while (i <= n) {
    if (diagram.gaps[static_cast<std::size_t>(i - 1)] <= diagram.s - 1) {
      int l = i;
      while (i <= n && diagram.gaps[static_cast<std::size_t>(i - 1)] <= diagram.s - 1) ++i;
      out.push_back(RowInterval{l, i});  // rows l .. (last gap index)+1
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<std::vector<Rational>> r_partition(const std::set<Rational>& Q, int s) {
  if (Q.empty()) throw domain_error("r_partition: empty point set");
  // Group by integer-shift class; within a class points are already sorted.
  std::map<Rational, std::vector<Rational>> classes;
  for (const Rational& q : Q) classes[q.frac_part()].push_back(q);
  std::vector<std::vector<Rational>> parts;
  for (auto& [key, pts] : classes) {
    std::vector<Rational> run;
    for (const Rational& q : pts) {
      if (!run.empty() && (q - run.back()) > Rational(Int(s - 1))) {
        parts.push_back(run);
        run.clear();
      }
      run.push_back(q);
    }
    if (!run.empty()) parts.push_back(run);
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return parts;
}

BlockDiagram block_diagram_of(const std::vector<Rational>& R, int s) {
  BlockDiagram d;
  d.labels = R;
  d.s = s;
  for (std::size_t i = 0; i + 1 < R.size(); ++i) {
    Rational diff = R[i + 1] - R[i];
    if (!diff.is_integer())
      throw internal_error("block_diagram_of: non-integer row gap");
    d.gaps.push_back(diff.num.convert_to<long long>());
  }
  return d;
}

std::vector<Column> columns_of(const BlockDiagram& block, const TupleStructure& st) {
  std::vector<Column> out;
  if (block.labels.empty()) return out;
  const Rational& lo = block.labels.front();
  const Rational& hi = block.labels.back();
  for (Rational t = lo; t <= hi + Rational(Int(block.s - 1)); t = t + Rational(Int(1))) {
    Column c;
    c.t = t;
    for (const Rational& r : block.labels) {
      Rational off = t - r;
      if (off >= Rational(Int(0)) && off <= Rational(Int(block.s - 1)))
        c.entries.emplace_back(r, static_cast<int>(off.num.convert_to<long long>()));
    }
    if (c.entries.empty()) continue;
    for (const auto& [r, off] : c.entries)
      for (int i : st.indices_of_point(r)) c.K.insert(i);
    for (int i : c.K) c.values.insert(st.sigma_of(i));
    c.essential = c.values.size() >= 2;
    out.push_back(std::move(c));
  }
  return out;
}

QuotientDiagram quotient_diagram(const TupleStructure& st) {
  QuotientDiagram qd;
  qd.s = st.s();
  for (const auto& R : r_partition(st.Q_all, st.s())) {
    BlockDiagram d = block_diagram_of(R, st.s());
    std::vector<Column> cols = columns_of(d, st);
    bool multi = std::any_of(cols.begin(), cols.end(),
                             [](const Column& c) { return c.K.size() >= 2; });
    if (!multi) continue;
    QuotientBlock qb;
    qb.diagram = std::move(d);
    qb.columns = std::move(cols);
    for (const Rational& r : R)
      for (int i : st.indices_of_point(r)) qb.D.insert(i);
    qd.blocks.push_back(std::move(qb));
  }
  return qd;
}

KMaxFamily kmax_via_columns(const TupleStructure& st) {
  KMaxFamily fam;
  for (const auto& R : r_partition(st.Q_all, st.s())) {
    BlockDiagram d = block_diagram_of(R, st.s());
    for (const Column& c : columns_of(d, st)) fam.members.insert(c.K);
  }
  return fam;
}

namespace {

// True iff some row label shared by both columns belongs to a Q_i with
// i in Sigma.
bool sigma_row_through(const Column& a, const Column& b,
                       const TupleStructure& st, const std::set<int>& Sigma) {
  for (const auto& [ra, offa] : a.entries) {
    for (const auto& [rb, offb] : b.entries) {
      if (!(ra == rb)) continue;
      for (int i : st.indices_of_point(ra))
        if (Sigma.count(i)) return true;
    }
  }
  return false;
}

}  // namespace

CellDecomposition essential_and_cells(const QuotientDiagram& qd,
                                      const TupleStructure& st,
                                      const std::set<int>& Sigma) {
  CellDecomposition dec;
  for (std::size_t bi = 0; bi < qd.blocks.size(); ++bi) {
    const QuotientBlock& qb = qd.blocks[bi];
    ReducedBlock rb;
    rb.block_index = bi;
    for (const Column& c : qb.columns)
      (c.essential ? rb.essential : rb.non_essential).push_back(c);
    if (rb.essential.empty()) continue;
    Cell cur;
    for (std::size_t ci = 0; ci < rb.essential.size(); ++ci) {
      if (!cur.column_index.empty() &&
          !sigma_row_through(rb.essential[cur.column_index.back()],
                             rb.essential[ci], st, Sigma)) {
        rb.cells.push_back(cur);
        cur = Cell{};
      }
      cur.column_index.push_back(ci);
      for (const auto& [r, off] : rb.essential[ci].entries) cur.labels.insert(r);
    }
    rb.cells.push_back(cur);
    for (Cell& cell : rb.cells) {
      for (const Rational& r : cell.labels)
        for (int i : st.indices_of_point(r)) {
          cell.indices.insert(i);
          if (Sigma.count(i)) cell.sigma_indices.insert(i);
        }
    }
    dec.blocks.push_back(std::move(rb));
  }
  return dec;
}

namespace {

std::string grid_row(long long offset, int s) {
  std::string row(static_cast<std::size_t>(offset), ' ');
  row.append(static_cast<std::size_t>(s), '.');
  return row;
}

}  // namespace

std::string render_ascii(const OverlapDiagram& diagram) {
  std::ostringstream os;
  long long offset = 0;
  os << grid_row(0, diagram.s) << "\n";
  for (long long g : diagram.gaps) {
    offset += g;
    os << grid_row(offset, diagram.s) << "\n";
  }
  return os.str();
}

std::string render_ascii(const QuotientDiagram& qd) {
  if (qd.blocks.empty()) return "(no blocks)\n";
  std::ostringstream os;
  bool first = true;
  for (const QuotientBlock& qb : qd.blocks) {
    if (!first) os << "\n";
    first = false;
    std::size_t width = 0;
    for (const Rational& r : qb.diagram.labels)
      width = std::max(width, r.str().size());
    long long offset = 0;
    for (std::size_t i = 0; i < qb.diagram.labels.size(); ++i) {
      if (i > 0) offset += qb.diagram.gaps[i - 1];
      std::string label = qb.diagram.labels[i].str();
      label.append(width - label.size(), ' ');
      os << label << " | " << grid_row(offset, qb.diagram.s) << "\n";
    }
  }
  return os.str();
}

}  // namespace qrd
