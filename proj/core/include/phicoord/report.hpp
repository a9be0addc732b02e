#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace phicoord {

enum class Status { pass, fail, insufficient_precision };

std::string to_string(Status s);
/// Process exit code for a status: 0 pass, 1 fail, 2 insufficient precision.
int exit_code(Status s);

struct Witness {
    std::string monomial;
    std::string lhs;
    std::string rhs;
    std::string context;
};

/// Outcome of a verification. Witnesses are only recorded for failures.
struct Report {
    std::string name;
    Status status = Status::pass;
    std::vector<Witness> witnesses;
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return status == Status::pass; }
    void fail(Witness w);
    void insufficient(const std::string& why);
    /// Folds another report in: fail dominates insufficient precision, which dominates pass.
    void absorb(const Report& other);
};

nlohmann::json to_json(const Report& r);
std::string summary(const Report& r);

} // namespace phicoord
