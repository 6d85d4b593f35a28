#include <iostream>

#include "morrey/acceptance.hpp"

int main() { return morrey::run_acceptance(std::cout) ? 0 : 1; }
