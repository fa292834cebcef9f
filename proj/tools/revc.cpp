#include "revc_cli.hpp"

int main( int argc, char** argv )
{
  return revcomp::cli::run( argc, argv, std::cout, std::cerr );
}
