#pragma once

#include "sytstrip/arith.hpp"

#include <string>
#include <vector>

namespace sytstrip {

/// One checked instance. Values are kept as exact decimal (or rational, or
/// canonical polynomial) text so that every suite shares one record type.
struct ReportRow {
    long index = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

struct SequenceReport {
    std::string family;
    long first_index = 0;
    long last_index = 0;
    std::vector<ReportRow> rows;
    std::vector<std::string> tags;  // e.g. "empirical claim violated"

    /// Conjunction of all row verdicts; an empty report passes vacuously.
    bool verdict() const;
    const ReportRow* first_failure() const;

    void add(long index, const BigInt& expected, const BigInt& actual, std::string note = {});
    void add(long index, const ExactRational& expected, const ExactRational& actual, std::string note = {});
    void add(long index, std::string expected, std::string actual, bool pass, std::string note = {});
};

}  // namespace sytstrip
