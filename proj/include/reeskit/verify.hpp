#ifndef REESKIT_VERIFY_HPP
#define REESKIT_VERIFY_HPP

#include <string>
#include <vector>

namespace reeskit {

struct VerifyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

// Built-in self-test: replays the bundled worked computations and compares
// them against their expected canonical forms.
std::vector<VerifyCheck> run_verify_checks();

} // namespace reeskit

#endif
