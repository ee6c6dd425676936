// Acceptance runner: executes the full verification suite at desk scale and
// prints exactly one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <exception>

#include "cyclesieve/checks.hpp"

int main() {
    using namespace cyclesieve;
    VerifyCaps caps;  // full desk-scale defaults
    bool all_pass = true;
    try {
        auto results = run_all_checks(caps);
        int index = 1;
        for (const auto& r : results) {
            std::printf("%s: criterion %d: %s -- %s\n", r.pass ? "PASS" : "FAIL", index,
                        r.name.c_str(), r.detail.c_str());
            std::fflush(stdout);
            all_pass = all_pass && r.pass;
            ++index;
        }
    } catch (const std::exception& e) {
        std::printf("FAIL: suite aborted -- %s\n", e.what());
        return 1;
    }
    return all_pass ? 0 : 1;
}
