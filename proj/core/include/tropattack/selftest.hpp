#pragma once

#include <string>
#include <vector>

namespace tropattack {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;  // nonempty on failure
};

// Runs the built-in demo instances through the protocol, the spectral and
// cycle-based factorization layers, the discrete-log solver and the full
// attack, comparing against their known transcripts.
std::vector<SelftestCheck> run_selftest();

}  // namespace tropattack
