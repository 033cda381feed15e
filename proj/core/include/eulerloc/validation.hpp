#pragma once

#include <string>
#include <vector>

#include "eulerloc/cell_complex.hpp"

namespace eulerloc {

enum class CheckStatus { Pass, Fail, Skipped };

struct ValidationCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

/// Ordered list of named checks. Failures never throw; they are recorded.
class ValidationReport {
public:
    void add(std::string name, bool passed, std::string detail = {});
    void skip(std::string name, std::string detail);
    void merge(const ValidationReport& other, const std::string& prefix = {});

    bool passed() const;
    const std::vector<ValidationCheck>& checks() const noexcept { return checks_; }
    const ValidationCheck* find(const std::string& name) const;

    /// One "name: PASS|FAIL|SKIP[ (detail)]" line per check.
    std::string to_text() const;

private:
    std::vector<ValidationCheck> checks_;
};

/// Necessary-condition checks for a closed combinatorial manifold:
///   diamond, boundary-squared, pseudomanifold, orientable, connected,
///   cell-boundaries and vertex-links (the last two only for top_dim <= 2;
///   reported as skipped above that).
ValidationReport validate_complex(const CellComplex& complex);

}  // namespace eulerloc
