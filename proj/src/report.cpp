#include "crossvar/report.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <limits>

#include "crossvar/errors.hpp"

namespace crossvar {

namespace {

struct Field {
    const char* name;
    Integer CensusReport::*member;
};

constexpr std::array<Field, 14> census_fields{{
    {"q", &CensusReport::q},
    {"K", &CensusReport::K},
    {"phi1", &CensusReport::phi1},
    {"phi2", &CensusReport::phi2},
    {"lambda1", &CensusReport::lambda1},
    {"lambda2", &CensusReport::lambda2},
    {"mu1", &CensusReport::mu1},
    {"mu2", &CensusReport::mu2},
    {"nP4", &CensusReport::nP4},
    {"nP5", &CensusReport::nP5},
    {"nC3", &CensusReport::nC3},
    {"nC4", &CensusReport::nC4},
    {"nPaw", &CensusReport::nPaw},
    {"nC3L2", &CensusReport::nC3L2},
}};

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw parse_error("census field is neither an integer nor a string");
}

} // namespace

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return to_string(v);
}

json census_json(const CensusReport& c) {
    json j = json::object();
    for (const auto& f : census_fields) j[f.name] = integer_json(c.*f.member);
    return j;
}

CensusReport census_from_json(const json& j) {
    CensusReport c;
    for (const auto& f : census_fields) c.*f.member = integer_from_json(j.at(f.name));
    return c;
}

json variance_json(const VarianceResult& r) {
    json j = {
        {"variance", r.variance.str()},
        {"variance_decimal", r.variance.decimal(12)},
        {"expectation", r.expectation.str()},
        {"algorithm", std::string(algorithm_name(r.algorithm))},
    };
    if (r.census) j["census"] = census_json(*r.census);
    if (r.hash_table_size) j["hash_table_size"] = *r.hash_table_size;
    return j;
}

json exhaustive_json(const ExhaustiveStats& s) {
    json dist = json::object();
    for (const auto& [c, count] : s.distribution) dist[std::to_string(c)] = count;
    return {{"sample_count", s.sample_count},
            {"mean", s.mean.str()},
            {"variance", s.variance.str()},
            {"distribution", dist}};
}

json monte_carlo_json(const MonteCarloStats& s) {
    return {{"sample_count", s.sample_count}, {"mean", s.mean}, {"variance", s.variance}};
}

std::string file_fingerprint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::uint64_t h = 0xcbf29ce484222325ull;
    std::array<char, 65536> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

} // namespace crossvar
