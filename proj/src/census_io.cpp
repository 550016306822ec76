#include "slopekit/census_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

struct Row {
    std::int64_t r, s, p, q, w, c, cr, cb;
    bool verified;
};

Row to_row(const CensusRecord& rec) {
    const TorusKnot t = rec.torus.canonical();
    const TorusKnot comp = rec.cable.companion().canonical();
    return {t.r(), t.s(), rec.p, rec.q, rec.cable.w(), rec.cable.c(), comp.r(), comp.s(), rec.verified};
}

CensusRecord from_row(const Row& row) {
    return {TorusKnot(row.r, row.s), row.p, row.q, CableKnot(row.w, row.c, TorusKnot(row.cr, row.cb)), row.verified};
}

std::int64_t parse_int(const std::string& field) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(field, &used);
    } catch (const std::exception&) {
        throw DomainError("census: bad integer field '" + field + "'");
    }
    if (used != field.size()) {
        throw DomainError("census: bad integer field '" + field + "'");
    }
    return v;
}

}  // namespace

std::string census_to_tsv(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    os << kCensusHeader << '\n';
    for (const CensusRecord& rec : records) {
        const Row x = to_row(rec);
        os << x.r << '\t' << x.s << '\t' << x.p << '\t' << x.q << '\t' << x.w << '\t' << x.c << '\t' << x.cr << '\t'
           << x.cb << '\t' << (x.verified ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string census_to_jsonl(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    for (const CensusRecord& rec : records) {
        const Row x = to_row(rec);
        // ordered_json keeps the column order of the TSV.
        nlohmann::ordered_json j;
        j["r"] = x.r;
        j["s"] = x.s;
        j["p"] = x.p;
        j["q"] = x.q;
        j["w"] = x.w;
        j["c"] = x.c;
        j["companion_r"] = x.cr;
        j["companion_b"] = x.cb;
        j["verified"] = x.verified;
        os << j.dump() << '\n';
    }
    return os.str();
}

std::vector<CensusRecord> census_from_tsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCensusHeader) {
        throw DomainError("census: missing or unexpected TSV header");
    }
    std::vector<CensusRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, '\t')) {
            fields.push_back(field);
        }
        if (fields.size() != 9) {
            throw DomainError("census: expected 9 TSV fields, got " + std::to_string(fields.size()));
        }
        if (fields[8] != "true" && fields[8] != "false") {
            throw DomainError("census: verified must be true or false");
        }
        out.push_back(from_row({parse_int(fields[0]), parse_int(fields[1]), parse_int(fields[2]),
                                parse_int(fields[3]), parse_int(fields[4]), parse_int(fields[5]),
                                parse_int(fields[6]), parse_int(fields[7]), fields[8] == "true"}));
    }
    return out;
}

std::vector<CensusRecord> census_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<CensusRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            const auto j = nlohmann::json::parse(line);
            out.push_back(from_row({j.at("r").get<std::int64_t>(), j.at("s").get<std::int64_t>(),
                                    j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(),
                                    j.at("w").get<std::int64_t>(), j.at("c").get<std::int64_t>(),
                                    j.at("companion_r").get<std::int64_t>(), j.at("companion_b").get<std::int64_t>(),
                                    j.at("verified").get<bool>()}));
        } catch (const nlohmann::json::exception& e) {
            throw DomainError(std::string("census: bad JSON line: ") + e.what());
        }
    }
    return out;
}

}  // namespace slopekit
