#include "qsent_tools/harness.hpp"

int main(int argc, char** argv) { return qsent::tools::run_cli(argc, argv); }
