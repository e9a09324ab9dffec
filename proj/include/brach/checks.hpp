#pragma once

// The numbered acceptance checks. Each check is a pure function of the seed
// and returns named residuals plus a verdict; report_all() runs the whole set
// and serialises a deterministic summary.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "brach/angmom4.hpp"
#include "brach/matcore.hpp"

namespace brach {

/// Seeded sampling helpers shared by the checks and the CLI.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    Vec3 vec3(double lo, double hi);
    /// Uniformly random unit spinor.
    Spinor unit_spinor();
    /// Real symmetric traceless 4x4 matrix with entries in [-1, 1].
    ComplexMat symmetric_traceless();

private:
    std::mt19937_64 rng_;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::map<std::string, double> residuals;
    std::vector<std::string> notes;
};

struct CheckInfo {
    int criterion;
    const char* name;
    const char* title;
};

/// Criteria 1..12 in order.
const std::vector<CheckInfo>& check_catalog();

/// Runs one of criteria 1..11. Throws std::out_of_range for other numbers;
/// criterion 12 needs the full suite and is produced by report_all().
CheckResult run_check(int criterion, std::uint64_t seed);

/// Runs criteria 1..11 in order.
std::vector<CheckResult> run_checks(std::uint64_t seed);

nlohmann::json to_json(const CheckResult& r);

struct Summary {
    std::vector<CheckResult> results;  ///< sorted by name
    std::string text;                  ///< serialised summary.json
    bool all_pass = false;
};

/**
 * Runs criteria 1..11 twice and adds criterion 12, which passes when both
 * runs serialise to identical bytes. The summary lists checks by name.
 */
Summary report_all(std::uint64_t seed);

}  // namespace brach
