#include <chrono>
#include <iostream>
#include "bircones/gkz.hpp"
using namespace bircones;
int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 3;
  ChamberCountOptions opts;
  opts.merge_secondary_fan = (argc <= 2);
  auto t0 = std::chrono::steady_clock::now();
  auto r = chamber_count(tl_degree_configuration(n), opts);
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "n=" << n << " walls=" << r.walls.size() << " cells=" << r.cells
            << " gkz=" << r.gkz_chambers << " ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  return 0;
}
