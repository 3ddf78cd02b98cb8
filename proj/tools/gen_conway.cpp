// Regenerates data/conway_gf2.txt: prints `n:HEX` for n = 1..max.

#include <cstdio>
#include <cstdlib>

#include "conway_search.hpp"

int main(int argc, char** argv) {
  const int max_level = argc > 1 ? std::atoi(argv[1]) : 30;
  sl2bar::tools::LowerConway table;
  for (int n = 1; n <= max_level; ++n) {
    table[n] = sl2bar::tools::conway_polynomial(n, table);
    std::printf("%d:%llX\n", n, static_cast<unsigned long long>(table[n].bits()));
    std::fflush(stdout);
  }
  return 0;
}
