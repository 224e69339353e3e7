#ifndef COSET_ATLAS_VERIFY_HPP
#define COSET_ATLAS_VERIFY_HPP

#include "coset_atlas/code.hpp"

#include <string>
#include <vector>

namespace coset_atlas::verify {

enum class Level { Identities, Orbits, Incidence, Table1, Table2, Brute, Laws, All };

Level parse_level(const std::string& name);
const char* level_name(Level level);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void add(std::string name, bool pass, std::string detail = "");
};

//! Runs one level (or all applicable ones) against the geometry for its q.
//! Check failures are collected in the report, never thrown.
Report run(const cubic::GeometryContext& geo, Level level, int jobs = 1);

} // namespace coset_atlas::verify

#endif
