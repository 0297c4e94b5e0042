// Prints the SO(p,q) verdict grid: which of p1, p2 vanish on compact
// quotients, for 1 <= q <= p and p + q <= N (default 10).

#include <cstdlib>
#include <iostream>

#include "pontclass/classify.hpp"

using namespace pontclass;

int main(int argc, char **argv) {
  int limit = argc > 1 ? std::atoi(argv[1]) : 10;
  if (limit < 3) {
    std::cerr << "usage: so_sweep [max p+q >= 3]\n";
    return 2;
  }
  std::cout << "p\\q";
  for (int q = 1; q <= limit / 2; ++q)
    std::cout << "  " << q << "  ";
  std::cout << "\n";
  for (int p = 2; p < limit; ++p) {
    std::cout << p << "  ";
    for (int q = 1; q <= p && p + q <= limit; ++q) {
      auto r = classify(make_spec(family::SO_PQ, {p, q}));
      // 0 marks a vanishing class, + a nonzero one
      std::cout << "  " << (r.p1_vanishes ? '0' : '+')
                << (r.p2_vanishes ? '0' : '+') << " ";
    }
    std::cout << "\n";
  }
  std::cout << "columns: p1 p2; 0 = vanishes, + = nonzero\n";
}
