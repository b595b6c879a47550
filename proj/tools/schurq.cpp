#include "schurq/lab.hpp"

int main(int argc, char** argv) { return schurq::lab::cli_main(argc, argv); }
