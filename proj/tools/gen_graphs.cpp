// Emit all connected graphs with up to N vertices (one canonical graph6 line
// per isomorphism class) for use as a scan corpus.
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "csh/graph.hpp"

int main(int argc, char** argv) {
  int max_n = 6;
  if (argc > 1) max_n = atoi(argv[1]);
  if (max_n < 1 || max_n > 7) {
    fprintf(stderr, "usage: %s [max_n]   (1 <= max_n <= 7)\n", argv[0]);
    return 2;
  }
  for (const std::string& line : csh::connected_graph_corpus(max_n)) std::cout << line << "\n";
  return 0;
}
