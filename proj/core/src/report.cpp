#include "phicoord/report.hpp"

namespace phicoord {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::insufficient_precision:
        return "insufficient-precision";
    }
    return "fail";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::pass:
        return 0;
    case Status::fail:
        return 1;
    case Status::insufficient_precision:
        return 2;
    }
    return 1;
}

void Report::fail(Witness w)
{
    status = Status::fail;
    witnesses.push_back(std::move(w));
}

void Report::insufficient(const std::string& why)
{
    if (status == Status::pass) {
        status = Status::insufficient_precision;
    }
    details["precision"] = why;
}

void Report::absorb(const Report& other)
{
    if (other.status == Status::fail) {
        status = Status::fail;
    } else if (other.status == Status::insufficient_precision && status == Status::pass) {
        status = Status::insufficient_precision;
    }
    for (const auto& w : other.witnesses) {
        Witness c = w;
        if (!other.name.empty()) {
            c.context = c.context.empty() ? other.name : other.name + ": " + c.context;
        }
        witnesses.push_back(std::move(c));
    }
    if (other.details.contains("precision") && !details.contains("precision")) {
        details["precision"] = other.details["precision"];
    }
}

nlohmann::json to_json(const Report& r)
{
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::json j{{"monomial", w.monomial}, {"lhs", w.lhs}, {"rhs", w.rhs}};
        if (!w.context.empty()) {
            j["context"] = w.context;
        }
        ws.push_back(std::move(j));
    }
    nlohmann::json out{{"name", r.name}, {"status", to_string(r.status)}, {"witnesses", ws}};
    if (!r.details.empty()) {
        out["details"] = r.details;
    }
    return out;
}

std::string summary(const Report& r)
{
    std::string s = r.name + ": " + to_string(r.status);
    if (!r.witnesses.empty()) {
        const Witness& w = r.witnesses.front();
        s += " at " + w.monomial + " (lhs " + w.lhs + ", rhs " + w.rhs + ")";
        if (!w.context.empty()) {
            s += " [" + w.context + "]";
        }
    }
    return s;
}

} // namespace phicoord
