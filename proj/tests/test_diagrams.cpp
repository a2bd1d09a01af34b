#include <doctest.h>

#include <random>

#include "qrd/density.hpp"
#include "qrd/diagrams.hpp"
#include "qrd/errors.hpp"
#include "support/corpus.hpp"

using namespace qrd;

namespace {

StandardTuple make(std::vector<long long> a, std::vector<long long> b, int s) {
  StandardTuple t;
  for (long long x : a) t.a.push_back(Int(x));
  for (long long x : b) t.b.push_back(Int(x));
  t.s = s;
  return t;
}

Rational rat(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

}  // namespace

TEST_CASE("blocks of an overlap diagram") {
  OverlapDiagram d{8, {3, 2, 2}};
  auto blocks = blocks_of(d);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0] == RowInterval{1, 4});

  CHECK(blocks_of(OverlapDiagram{8, {8}}).empty());

  auto two = blocks_of(OverlapDiagram{8, {1, 9, 1}});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == RowInterval{1, 2});
  CHECK(two[1] == RowInterval{3, 4});
}

TEST_CASE("block intervals cover at least two rows and are separated") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    OverlapDiagram d;
    d.s = 2 + static_cast<int>(rng() % 7);
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i)
      d.gaps.push_back(1 + static_cast<long long>(rng() % (2 * d.s)));
    auto blocks = blocks_of(d);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      CHECK(blocks[i].last - blocks[i].first >= 1);
      if (i > 0) CHECK(blocks[i].first > blocks[i - 1].last);
      // inside the block every gap fits
      for (int g = blocks[i].first; g < blocks[i].last; ++g)
        CHECK(d.gaps[static_cast<std::size_t>(g - 1)] <= d.s - 1);
    }
    // gaps outside any block are >= s
    for (std::size_t g = 1; g <= n; ++g) {
      bool inside = false;
      for (const auto& b : blocks)
        if (static_cast<int>(g) >= b.first && static_cast<int>(g) < b.last)
          inside = true;
      if (!inside) CHECK(d.gaps[g - 1] >= d.s);
    }
  }
}

TEST_CASE("point set partition") {
  auto parts = r_partition({rat(1, 2), rat(3, 2)}, 2);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<Rational>{rat(1, 2), rat(3, 2)});

  CHECK(r_partition({rat(1, 2), rat(2)}, 5).size() == 2);
  CHECK(r_partition({rat(0), rat(5)}, 3).size() == 2);
}

TEST_CASE("partition parts stay within one shift class and split at s") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<Rational> q;
    int s = 2 + static_cast<int>(rng() % 5);
    std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i)
      q.insert(rat(static_cast<long long>(rng() % 40), 1 + rng() % 6));
    auto parts = r_partition(q, s);
    std::size_t total = 0;
    for (const auto& part : parts) {
      total += part.size();
      for (std::size_t i = 0; i + 1 < part.size(); ++i) {
        Rational diff = part[i + 1] - part[i];
        CHECK(diff.is_integer());
        CHECK(diff <= rat(s - 1));
      }
    }
    CHECK(total == q.size());
  }
}

TEST_CASE("columns of the reference block") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  auto parts = r_partition(st.Q_all, st.s());
  REQUIRE(parts.size() == 1);
  auto cols = columns_of(block_diagram_of(parts[0], st.s()), st);
  REQUIRE(cols.size() == 3);  // (max - min) + s - 1 + 1
  CHECK(cols[0].t == rat(1, 2));
  CHECK(cols[0].K == std::set<int>{1});
  CHECK(cols[1].t == rat(3, 2));
  CHECK(cols[1].K == std::set<int>{1, 2});
  CHECK(cols[2].t == rat(5, 2));
  CHECK(cols[2].K == std::set<int>{2});
  for (const Column& c : cols)
    for (const auto& [label, offset] : c.entries)
      CHECK(label + rat(offset) == c.t);
}

TEST_CASE("single row block has s singleton columns") {
  TupleStructure st = build_structure(make({1, 100}, {2, 3}, 3));
  auto parts = r_partition(st.Q_all, st.s());
  for (const auto& part : parts) {
    if (part.size() != 1) continue;
    auto cols = columns_of(block_diagram_of(part, st.s()), st);
    CHECK(cols.size() == 3);
    for (const Column& c : cols) CHECK(c.entries.size() == 1);
  }
}

TEST_CASE("columns with identical point sets") {
  TupleStructure st = build_structure(make({2, 4}, {1, 2}, 2));
  auto parts = r_partition(st.Q_all, st.s());
  REQUIRE(parts.size() == 1);
  auto cols = columns_of(block_diagram_of(parts[0], st.s()), st);
  REQUIRE(cols.size() == 2);
  for (const Column& c : cols) CHECK(c.K == std::set<int>{1, 2});
}

TEST_CASE("two kmax computations agree on the worked examples") {
  for (auto t : {make({1, 9}, {2, 6}, 2), make({2, 4}, {1, 2}, 2),
                 make({1, 100}, {2, 3}, 2), make({0, 3, 16, 15}, {2, 3, 8, 5}, 2)}) {
    TupleStructure st = build_structure(t);
    CHECK(kmax_via_columns(st).members == kmax_direct(st).members);
  }
}

TEST_CASE("two kmax computations agree on random tuples") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    StandardTuple t = qrd_test::random_tuple(rng);
    TupleStructure st = build_structure(t);
    REQUIRE(kmax_via_columns(st).members == kmax_direct(st).members);
  }
}

TEST_CASE("quotient diagram of the reference tuple") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  QuotientDiagram qd = quotient_diagram(st);
  REQUIRE(qd.blocks.size() == 1);
  CHECK(qd.blocks[0].diagram.labels ==
        std::vector<Rational>{rat(1, 2), rat(3, 2)});
  CHECK(qd.blocks[0].D == std::set<int>{1, 2});
}

TEST_CASE("disjoint point sets give an empty quotient diagram") {
  TupleStructure st = build_structure(make({1, 100}, {2, 3}, 2));
  CHECK(quotient_diagram(st).blocks.empty());
}

TEST_CASE("prescribed blocks appear in the quotient diagram") {
  std::vector<Int> gaps = gaps_for_quotient_spec({{Int(1)}, {Int(1)}}, 2);
  StandardTuple t = generate_chain_primes(gaps, 2);
  TupleStructure st = build_structure(t);
  QuotientDiagram qd = quotient_diagram(st);
  REQUIRE(qd.blocks.size() == 2);
  for (const auto& b : qd.blocks) CHECK(b.diagram.labels.size() == 2);
}

TEST_CASE("gaps of size s leave no overlap at all") {
  int s = 3;
  StandardTuple t =
      generate_chain_primes({Int(s), Int(s), Int(s)}, s);
  TupleStructure st = build_structure(t);
  CHECK(quotient_diagram(st).blocks.empty());
  for (const auto& K : kmax_direct(st).members) CHECK(K.size() == 1);
}

TEST_CASE("essential columns and cells on the reference tuple") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  DensityAnalysis a = analyze(st.tuple);
  QuotientDiagram qd = quotient_diagram(st);
  CellDecomposition dec = essential_and_cells(qd, st, a.Sigma);
  REQUIRE(dec.blocks.size() == 1);
  CHECK(dec.blocks[0].essential.size() == 1);
  CHECK(dec.blocks[0].essential[0].t == rat(3, 2));
  CHECK(dec.blocks[0].non_essential.size() == 2);
  REQUIRE(dec.blocks[0].cells.size() == 1);
  CHECK(dec.blocks[0].cells[0].indices == std::set<int>{1, 2});
}

TEST_CASE("equal squarefree parts leave no essential columns") {
  TupleStructure st = build_structure(make({1, 4}, {2, 8}, 2));
  // sigma = (2, 2): every column sees a single value
  QuotientDiagram qd = quotient_diagram(st);
  CellDecomposition dec = essential_and_cells(qd, st, {});
  CHECK(dec.cell_count() == 0);
}

TEST_CASE("one cell per block for nested prime supports") {
  std::vector<Int> gaps = gaps_for_quotient_spec({{Int(1)}, {Int(1)}}, 2);
  StandardTuple t = generate_chain_primes(gaps, 2);
  DensityAnalysis a = analyze(t);
  QuotientDiagram qd = quotient_diagram(a.structure);
  CellDecomposition dec = essential_and_cells(qd, a.structure, a.Sigma);
  REQUIRE(dec.blocks.size() == 2);
  for (const auto& b : dec.blocks) CHECK(b.cells.size() == 1);
  // cell label sets within a block are pairwise disjoint
  for (const auto& b : dec.blocks)
    for (std::size_t i = 0; i < b.cells.size(); ++i)
      for (std::size_t j = i + 1; j < b.cells.size(); ++j)
        for (int idx : b.cells[i].sigma_indices)
          CHECK(!b.cells[j].sigma_indices.count(idx));
}

TEST_CASE("cells match the Sigma classes on admissible distinct-part tuples") {
  std::mt19937 rng(1234);
  int done = 0;
  while (done < 50) {
    std::size_t k = 2 + rng() % 5;
    std::vector<Int> gaps, mult;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      gaps.push_back(Int(1 + rng() % 4));
      mult.push_back(Int(2 + rng() % 5));
    }
    StandardTuple t = generate_chain_primes(gaps, 3);
    DensityAnalysis a = analyze(t);
    if (a.mu == 0) continue;
    ++done;
    QuotientDiagram qd = quotient_diagram(a.structure);
    CellDecomposition dec = essential_and_cells(qd, a.structure, a.Sigma);
    std::set<std::set<int>> cell_sets;
    for (const auto& b : dec.blocks)
      for (const auto& cell : b.cells) cell_sets.insert(cell.sigma_indices);
    std::set<std::set<int>> class_sets(a.classes.begin(), a.classes.end());
    REQUIRE(cell_sets == class_sets);
  }
}

TEST_CASE("staircase rendering") {
  OverlapDiagram d{8, {3, 2, 2}};
  CHECK(render_ascii(d) ==
        "........\n"
        "   ........\n"
        "     ........\n"
        "       ........\n");
  CHECK(render_ascii(OverlapDiagram{4, {}}) == "....\n");
}

TEST_CASE("quotient diagram rendering") {
  TupleStructure st = build_structure(make({1, 9}, {2, 6}, 2));
  CHECK(render_ascii(quotient_diagram(st)) ==
        "1/2 | ..\n"
        "3/2 |  ..\n");
  TupleStructure disjoint = build_structure(make({1, 100}, {2, 3}, 2));
  CHECK(render_ascii(quotient_diagram(disjoint)) == "(no blocks)\n");
}
