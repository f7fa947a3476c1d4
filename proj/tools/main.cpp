#include "zcu/cli.hpp"

int main(int argc, char** argv) { return zcu::run(argc, argv); }
