#include "hpl/harness.hpp"

int main(int argc, char** argv) { return hpl::run_cli(argc, argv); }
