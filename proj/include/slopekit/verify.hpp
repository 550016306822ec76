#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace slopekit {

struct VerifyReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // first few only
    std::size_t failure_count = 0;

    bool pass() const { return failure_count == 0; }
};

/// poincare, remark-29-2, congruences, moser, mapform, contfrac.
const std::vector<std::string>& verify_names();

/// Runs a named check bundle. Throws DomainError for unknown names.
VerifyReport run_verify(const std::string& name);

}  // namespace slopekit
