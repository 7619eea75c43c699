#pragma once

#include <string>
#include <vector>

namespace stein {

struct Record {
    std::string identity;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Record> records;

    void add(std::string identity, bool pass, std::string detail = {}) {
        records.push_back({std::move(identity), pass, std::move(detail)});
    }
    void append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
};

}  // namespace stein
