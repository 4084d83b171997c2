#pragma once

// JSON forms of cochains and verification reports.
// Cochains: {"degree": n, "module": name, "entries": [{"tuple": [[i,j],...],
// "value": [residues]}]} with zero entries omitted.

#include <string>

#include "cohomkern/cohomology.hpp"
#include "cohomkern/report.hpp"

namespace cohomkern {

std::string cochain_to_json(const MetacyclicGroup& G, const Cochain& c);
// the module decides rank/degree shape; the "module" field must match its name
Cochain cochain_from_json(const MetacyclicGroup& G, const GModule& M, const std::string& text);

}  // namespace cohomkern
