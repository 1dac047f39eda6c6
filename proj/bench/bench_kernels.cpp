// Timing comparison of the serial reference kernels against the
// OpenMP-parallel ones: morphism enumeration and exponential arc
// enumeration. Build and run manually:
//
//   cmake --build build --target bench_kernels
//   ./build/bench/bench_kernels [scale]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "xmg/expo.hpp"

using namespace xmg;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// Complete symmetric pair graph on n vertices: one arc pair per ordered
// pair of distinct vertices, swapped by the involution.
GraphPtr complete_graph(const TheoryPtr& t, Idx n) {
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx u = 0; u < n; ++u)
    for (Idx v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<Idx> inc, act;
  auto index_of = [&](Idx u, Idx v) -> Idx {
    for (Idx i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::make_pair(u, v)) return i;
    return kNoIdx;
  };
  for (auto [u, v] : pairs) {
    inc.push_back(u);
    inc.push_back(v);
    act.push_back(index_of(u, v));
    act.push_back(index_of(v, u));
  }
  return make_graph(t, n, std::move(inc), std::move(act));
}

// A two-vertex base with both arcs parked at vertex 0; exponentials by
// sums of arc representables then stress the family enumeration.
GraphPtr parked_loops(const TheoryPtr& t) {
  auto L = loop_pair_graph(t);
  auto V = representable(t, Obj::V);
  return coproduct(L, V).graph;
}

struct Row {
  const char* kernel;
  std::string size;
  double serial;
  double parallel;
  std::uint64_t result;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-18s %-16s %10s %10s %9s %12s\n", "kernel", "instance",
              "serial", "parallel", "speedup", "result");
  for (const auto& r : rows) {
    std::printf("%-18s %-16s %9.3fs %9.3fs %8.2fx %12llu\n", r.kernel,
                r.size.c_str(), r.serial, r.parallel,
                r.parallel > 0 ? r.serial / r.parallel : 0.0,
                static_cast<unsigned long long>(r.result));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  auto t = standard_theory(2, MonoidKind::symmetric);
  std::vector<Row> rows;

  // morphism enumeration into complete graphs
  for (Idx n = 4; n <= 5 + scale; ++n) {
    auto G = complete_graph(t, 3);
    auto H = complete_graph(t, n);
    HomOptions ser{.budget = 1ull << 40, .parallel = false};
    HomOptions par{.budget = 1ull << 40, .parallel = true};
    auto t0 = std::chrono::steady_clock::now();
    auto a = enumerate_homs_serial(G, H, ser);
    auto t1 = std::chrono::steady_clock::now();
    auto b = enumerate_homs(G, H, par);
    auto t2 = std::chrono::steady_clock::now();
    if (a.size() != b.size()) {
      std::fprintf(stderr, "kernel mismatch: %zu vs %zu\n", a.size(),
                   b.size());
      return 1;
    }
    rows.push_back({"hom-enumeration", "K3 -> K" + std::to_string(n),
                    seconds(t0, t1), seconds(t1, t2), a.size()});
  }

  // exponential arc enumeration over growing exponents
  auto base = parked_loops(t);
  auto reprA = representable(t, Obj::A);
  GraphPtr H = reprA;
  for (int k = 2; k <= 4 + scale; ++k) {
    H = coproduct(H, reprA).graph;
    ExpoOptions ser;
    ser.parallel = false;
    ser.max_families = 1ull << 32;
    ser.max_arcs = 1ull << 24;
    ExpoOptions par = ser;
    par.parallel = true;
    auto t0 = std::chrono::steady_clock::now();
    Exponential a = exponential(base, H, ser);
    auto t1 = std::chrono::steady_clock::now();
    Exponential b = exponential(base, H, par);
    auto t2 = std::chrono::steady_clock::now();
    if (a.arcs.size() != b.arcs.size() || !(*a.graph == *b.graph)) {
      std::fprintf(stderr, "kernel mismatch in exponential\n");
      return 1;
    }
    rows.push_back({"exponential-arcs",
                    "H = " + std::to_string(k) + " arc blocks",
                    seconds(t0, t1), seconds(t1, t2), a.arcs.size()});
  }

  print_rows(rows);
  return 0;
}
