#ifndef SL2COH_CHECKS_HPP
#define SL2COH_CHECKS_HPP

#include <string>
#include <vector>

namespace sl2coh {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kCodeVersion = "sl2coh-1.0.0";

enum class Outcome { exact_subspace, dimension, boolean_check, stabilization };

struct CheckParams {
    int D = 4;
    int E = 4;
    int r = 1;
    int i_max = 1;
    int r_max = 2;

    /// Canonical serialized form; part of the cache key.
    std::string str() const;
};

struct CheckDescriptor {
    std::string name;
    std::string claim;  // the verified statement, as a formula
    Outcome outcome;
    bool uses_D = false, uses_E = false, uses_r = false, uses_i_max = false, uses_r_max = false;
    CheckParams quick;  // bounds for the quick profile
    CheckParams full;   // bounds for the full profile
};

const std::vector<CheckDescriptor>& check_registry();
const CheckDescriptor* find_check(const std::string& name);

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct RunReport {
    std::string check;
    CheckParams params;
    Status status = Status::fail;
    std::string payload;  // deterministic JSON object
    double wall_ms = 0;   // not part of the cache key or payload

    /// Deterministic JSON document (excludes wall time).
    std::string to_json() const;
};

/// Executes a check by name.  Throws std::invalid_argument for an unknown
/// name and GuardError when the parameters exceed the size guards.
RunReport run_check(const std::string& name, const CheckParams& params);

/// FNV-1a content hash of (check, params, code version): the cache key.
std::string cache_key(const std::string& check, const CheckParams& params);

/// Cache lookup / store under dir (created on demand).  Files are written
/// with create-then-rename.  load returns false when absent or unreadable.
bool cache_load(const std::string& dir, const std::string& check, const CheckParams& params,
                RunReport& out);
void cache_store(const std::string& dir, const RunReport& report);

}  // namespace sl2coh

#endif
