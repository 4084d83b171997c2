#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cohomkern/groups.hpp"

namespace cohomkern::cli {

// exit codes: 0 all claims pass, 1 claim failure, 2 usage/config error
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

struct GroupSpec {
    uint32_t d = 0, s = 0, t = 0;
};

// "metacyclic:d,s,t"
GroupSpec parse_group_descriptor(const std::string& text);
// s = 1 -> cyclic; s = 2 with t = -1 -> dihedral-classic; s even -> semidirect
Family infer_family(const GroupSpec& g);

}  // namespace cohomkern::cli
