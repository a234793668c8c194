#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vdcq {

// One verified inequality instance: measured left side, bound value, their
// ratio, and a label for the case split it belongs to.
struct BoundCase {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    std::string branch;
};

struct BoundReport {
    std::string name;
    std::vector<BoundCase> cases;

    void add(std::string id, double lhs, double rhs, std::string branch = "");
    // Keeps only the extreme case per branch; used by exhaustive scans.
    void add_max(std::string id, double lhs, double rhs, std::string branch = "");
    double max_ratio() const;
    double max_ratio(const std::string& branch) const;
    std::size_t size() const { return cases.size(); }
};

// CSV column order: instance,lhs,rhs,ratio,branch
void write_csv(std::ostream& os, const BoundReport& report);

// Shortest representation that round-trips a double; deterministic for a
// fixed binary, so seeded runs emit byte-identical files.
std::string csv_double(double v);

}  // namespace vdcq
