#include "sytstrip/report.hpp"

#include <algorithm>

namespace sytstrip {

bool SequenceReport::verdict() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

const ReportRow* SequenceReport::first_failure() const {
    auto it = std::find_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; });
    return it == rows.end() ? nullptr : &*it;
}

void SequenceReport::add(long index, std::string expected, std::string actual, bool pass, std::string note) {
    if (rows.empty()) first_index = index;
    first_index = std::min(first_index, index);
    last_index = rows.empty() ? index : std::max(last_index, index);
    rows.push_back(ReportRow{index, std::move(expected), std::move(actual), pass, std::move(note)});
}

void SequenceReport::add(long index, const BigInt& expected, const BigInt& actual, std::string note) {
    add(index, expected.get_str(), actual.get_str(), expected == actual, std::move(note));
}

void SequenceReport::add(long index, const ExactRational& expected, const ExactRational& actual,
                         std::string note) {
    add(index, expected.get_str(), actual.get_str(), expected == actual, std::move(note));
}

}  // namespace sytstrip
