#include <cstdlib>
#include <iostream>

#include "cli.hpp"
#include "hankeldet/numbers.hpp"

int main(int argc, char** argv) {
  const char* cache = std::getenv("HANKELDET_CACHE_DIR");
  if (cache && *cache) {
    try {
      hankeldet::load_number_tables(cache);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring number cache: " << e.what() << "\n";
    }
  }
  const int code = hankeldet::cli::run(argc, argv, std::cout, std::cerr);
  if (cache && *cache) {
    try {
      hankeldet::save_number_tables(cache);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write number cache: " << e.what() << "\n";
    }
  }
  return code;
}
