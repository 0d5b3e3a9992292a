#include "catrw/mesh.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace catrw {

CSet gen_mesh(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("gen_mesh: rows and cols must be positive");
  const auto s = delta2_schema(true);
  const ObId V = s->object("V"), E = s->object("E"), T = s->object("T");
  const GenId src = s->generator_id("src"), tgt = s->generator_id("tgt");
  const GenId d0 = s->generator_id("d0"), d1 = s->generator_id("d1"), d2 = s->generator_id("d2");

  auto vert = [&](std::size_t i, std::size_t j) { return static_cast<Part>(i * (cols + 1) + j); };
  const std::size_t nh = (rows + 1) * cols, nv = rows * (cols + 1);
  auto horiz = [&](std::size_t i, std::size_t j) { return static_cast<Part>(i * cols + j); };
  auto vertical = [&](std::size_t i, std::size_t j) { return static_cast<Part>(nh + i * (cols + 1) + j); };
  auto diag = [&](std::size_t i, std::size_t j) { return static_cast<Part>(nh + nv + i * cols + j); };

  std::vector<std::size_t> card(s->num_objects());
  card[V] = (rows + 1) * (cols + 1);
  card[E] = nh + nv + rows * cols;
  card[T] = 2 * rows * cols;
  std::vector<std::vector<Part>> col(s->num_generators());
  for (std::size_t i = 0; i <= rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      col[src].push_back(vert(i, j));
      col[tgt].push_back(vert(i, j + 1));
    }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j <= cols; ++j) {
      col[src].push_back(vert(i, j));
      col[tgt].push_back(vert(i + 1, j));
    }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      col[src].push_back(vert(i, j));
      col[tgt].push_back(vert(i + 1, j + 1));
    }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      col[d1].push_back(horiz(i, j));
      col[d2].push_back(vertical(i, j + 1));
      col[d0].push_back(diag(i, j));
      col[d1].push_back(vertical(i, j));
      col[d2].push_back(horiz(i + 1, j));
      col[d0].push_back(diag(i, j));
    }
  return make_instance(s, std::move(card), std::move(col));
}

CSetPtr quad_pattern() {
  // bl=1 br=2 tl=3 tr=4; bottom=1 right=2 diagonal=3 left=4 top=5
  return share(make_instance(delta2_schema(true), {{"V", 4}, {"E", 5}, {"T", 2}},
                             {{"src", {1, 2, 1, 1, 3}},
                              {"tgt", {2, 4, 4, 3, 4}},
                              {"d0", {3, 3}},
                              {"d1", {1, 4}},
                              {"d2", {2, 5}}}));
}

Rule edge_flip_rule(RewriteKind kind) {
  const auto s = delta2_schema(true);
  auto L = quad_pattern();
  // bottom=1 right=2 left=3 top=4
  auto I = share(make_instance(s, {{"V", 4}, {"E", 4}, {"T", 0}}, {{"src", {1, 2, 1, 3}}, {"tgt", {2, 4, 3, 4}}}));
  // ... plus the new diagonal br -> tl as edge 5
  auto R = share(make_instance(s, {{"V", 4}, {"E", 5}, {"T", 2}},
                               {{"src", {1, 2, 1, 3, 2}},
                                {"tgt", {2, 4, 3, 4, 3}},
                                {"d0", {3, 2}},
                                {"d1", {1, 5}},
                                {"d2", {5, 4}}}));
  Transformation l(I, L, {{0, 1, 2, 3}, {0, 1, 3, 4}, {}});
  Transformation r(I, R, {{0, 1, 2, 3}, {0, 1, 2, 3}, {}});
  return Rule(std::move(l), std::move(r), kind);
}

BenchTask parse_bench_task(const std::string& s) {
  if (s == "homsearch") return BenchTask::HomSearch;
  if (s == "rewrite") return BenchTask::Rewrite;
  throw ParseError("unknown bench task '" + s + "'");
}

std::vector<BenchRow> run_bench(BenchTask task, const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
                                double min_batch_seconds) {
  using Clock = std::chrono::steady_clock;
  const auto rule = edge_flip_rule(RewriteKind::DPO);
  const auto pattern = quad_pattern();
  SearchOptions monic;
  monic.monic = true;

  std::vector<BenchRow> out;
  std::vector<CSetPtr> meshes;
  for (auto [rows, cols] : sizes) meshes.push_back(share(gen_mesh(rows, cols)));
  auto run_once = [&](const CSetPtr& G) -> std::size_t {
    if (task == BenchTask::HomSearch) return count_homomorphisms(pattern, G, monic);
    return find_and_rewrite(rule, G, monic).size();
  };
  auto time_batch = [&](const CSetPtr& G, std::size_t batch) {
    const auto t0 = Clock::now();
    for (std::size_t k = 0; k < batch; ++k) run_once(G);
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  std::vector<std::size_t> batch(sizes.size(), 1);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto& G = meshes[i];
    out.push_back({sizes[i].first, sizes[i].second, G->card("V"), G->card("E"), G->card("T"), run_once(G), 0.0});
    while (time_batch(G, batch[i]) < min_batch_seconds && batch[i] < (1u << 20)) batch[i] *= 2;
  }
  // Sizes are timed round-robin so that drift in machine load hits all of
  // them alike; each keeps its fastest batch mean.
  constexpr int kRounds = 7;
  for (int round = 0; round < kRounds; ++round)
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const double mean = time_batch(meshes[i], batch[i]) / static_cast<double>(batch[i]);
      out[i].seconds = round == 0 ? mean : std::min(out[i].seconds, mean);
    }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "rows,cols,vertices,edges,triangles,count,seconds\n";
  for (const auto& r : rows) {
    char t[32];
    std::snprintf(t, sizeof t, "%.9f", r.seconds);
    os << r.rows << ',' << r.cols << ',' << r.vertices << ',' << r.edges << ',' << r.triangles << ',' << r.count << ','
       << t << '\n';
  }
  return os.str();
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(item);
      std::size_t used1 = 0, used2 = 0;
      const auto r = std::stoul(item.substr(0, x), &used1);
      const auto c = std::stoul(item.substr(x + 1), &used2);
      if (used1 != x || used2 != item.size() - x - 1 || r == 0 || c == 0) throw std::invalid_argument(item);
      out.emplace_back(r, c);
    } catch (const std::logic_error&) {
      throw ParseError("bad mesh size '" + item + "' (expected ROWSxCOLS)");
    }
  }
  return out;
}

}  // namespace catrw
