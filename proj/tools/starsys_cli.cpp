#include <starsys/cli.hpp>

int main(int argc, char** argv) { return starsys::cli::dispatch(argc, argv); }
