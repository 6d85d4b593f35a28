#pragma once

#include <ostream>

namespace morrey {

// Runs the full self-test battery. Prints one PASS/FAIL line per criterion
// followed by a summary. Returns true when every criterion passes.
bool run_acceptance(std::ostream& out);

}  // namespace morrey
