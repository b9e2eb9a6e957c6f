#pragma once

#include <string>
#include <vector>

#include "bprm/types.hpp"

namespace bprm {

struct ValidationIssue {
    std::string record_id;
    std::string code;    // NonPositiveTime, EntryAfterExit, NegativeContinuousExposure, ...
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

// Checks every type invariant; returns the offending records instead of
// throwing so callers can report them all at once.
ValidationReport validate_dataset(const Dataset& data);

// Convenience wrapper: throws DataError carrying the report text.
const Dataset& validated_or_throw(const Dataset& data);

}  // namespace bprm
