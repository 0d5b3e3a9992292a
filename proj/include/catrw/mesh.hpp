#pragma once

#include <string>
#include <vector>

#include "catrw/rewrite.hpp"

namespace catrw {

/// Triangulated rows x cols grid on Delta2. Vertex (i, j) for row i in
/// 0..rows and column j in 0..cols has id i*(cols+1)+j. Edges are all
/// horizontal (i,j)->(i,j+1), then all vertical (i,j)->(i+1,j), then all
/// diagonals (i,j)->(i+1,j+1). Each cell contributes a lower triangle
/// (bottom, right; diagonal) and then an upper one (left, top; diagonal),
/// written as (d1, d2; d0).
CSet gen_mesh(std::size_t rows, std::size_t cols);

/// Two triangles sharing their d0 edge: the quadrilateral pattern.
/// Vertices bl, br, tl, tr; edges bottom, right, diagonal, left, top.
CSetPtr quad_pattern();

/// Flip the diagonal of a quadrilateral (bl -> tr becomes br -> tl),
/// keeping its four vertices and four boundary edges.
Rule edge_flip_rule(RewriteKind kind = RewriteKind::DPO);

enum class BenchTask { HomSearch, Rewrite };
BenchTask parse_bench_task(const std::string& s);  // "homsearch" | "rewrite"

struct BenchRow {
  std::size_t rows, cols;
  std::size_t vertices, edges, triangles;
  std::size_t count;  // monic quadrilateral matches, or rewrites performed
  double seconds;     // mean wall time of one run
};

/// Runs the task on gen_mesh(rows, cols) for every size. Timings are the
/// fastest of several batch means, each batch lasting at least
/// min_batch_seconds.
std::vector<BenchRow> run_bench(BenchTask task, const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
                                double min_batch_seconds = 0.02);

/// "rows,cols,vertices,edges,triangles,count,seconds" header plus one line
/// per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Parses "2x2,2x3"; throws ParseError. An empty string gives no sizes.
std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& s);

}  // namespace catrw
