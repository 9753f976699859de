// Writes the synthetic 128x128 facade (3x4 windows plus an outside decoy) as a
// binary PGM, for trying the pipeline without real imagery.
#include <iostream>

#include "dsv/error.hpp"
#include "dsv/netpbm.hpp"
#include "dsv/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_facade OUT.pgm\n";
    return 2;
  }
  try {
    dsv::write_pgm(dsv::synthetic::make_facade().image, argv[1]);
  } catch (const dsv::Error& e) {
    std::cerr << "make_facade: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
