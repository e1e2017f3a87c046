#include <fstream>
#include <map>
#include <sstream>

#include "crossvar/errors.hpp"
#include "crossvar/frequencies.hpp"

namespace crossvar {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

} // namespace

const ExpectationTable& builtin_rla_table() {
    static const ExpectationTable table = [] {
        ExpectationTable t;
        t.name = "rla";
        t.delta = Rational(1, 3);
        t.gamma[index_of(ProductType::t00)] = 0;
        t.gamma[index_of(ProductType::t24)] = Rational(2, 9);
        t.gamma[index_of(ProductType::t13)] = Rational(1, 18);
        t.gamma[index_of(ProductType::t12)] = Rational(1, 45);
        t.gamma[index_of(ProductType::t04)] = Rational(-1, 9);
        t.gamma[index_of(ProductType::t03)] = Rational(-1, 36);
        t.gamma[index_of(ProductType::t021)] = Rational(-1, 90);
        t.gamma[index_of(ProductType::t022)] = Rational(1, 180);
        t.gamma[index_of(ProductType::t01)] = 0;
        return t;
    }();
    return table;
}

ExpectationTable load_layout_table(std::istream& in) {
    ExpectationTable table;
    table.name = "custom";
    std::optional<Rational> delta;
    std::array<std::optional<Rational>, 9> p{};
    std::array<std::optional<Rational>, 9> e{};
    std::vector<std::string> problems;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw parse_error("expected 'key = value'", lineno);
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key == "name") {
            table.name = value;
            continue;
        }
        Rational r;
        try {
            r = Rational::parse(value);
        } catch (const parse_error&) {
            problems.push_back("line " + std::to_string(lineno) + ": '" + value + "' is not a rational");
            continue;
        }
        if (key == "delta") {
            delta = r;
            continue;
        }
        const bool is_p = key.starts_with("p_");
        const bool is_e = key.starts_with("E_");
        const auto type = (is_p || is_e) ? product_type_from_code(std::string_view(key).substr(2)) : std::nullopt;
        if (!type) {
            problems.push_back("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            continue;
        }
        (is_p ? p : e)[index_of(*type)] = r;
    }

    if (!delta) {
        problems.push_back("delta is missing");
    } else if (delta->sign() < 0 || *delta > Rational(1)) {
        problems.push_back("delta = " + delta->str() + " is not a probability");
    }

    for (auto t : all_product_types) {
        const std::size_t i = index_of(t);
        const std::string c(code(t));
        if (!p[i] && !e[i]) {
            problems.push_back("type " + c + " is missing");
            continue;
        }
        if (p[i] && (p[i]->sign() < 0 || *p[i] > Rational(1)))
            problems.push_back("p_" + c + " = " + p[i]->str() + " is not a probability");
        if (!delta) continue;
        const Rational d2 = *delta * *delta;
        const Rational gamma = e[i] ? *e[i] : *p[i] - d2;
        if (p[i] && e[i] && *p[i] - d2 != *e[i])
            problems.push_back("p_" + c + " and E_" + c + " disagree");
        table.gamma[i] = gamma;
    }

    if (delta && problems.empty()) {
        const Rational expected24 = *delta - *delta * *delta;
        if (table[ProductType::t24] != expected24)
            problems.push_back("E_24 = " + table[ProductType::t24].str() + " but delta - delta^2 = " +
                               expected24.str());
        for (auto t : {ProductType::t00, ProductType::t01})
            if (!table[t].is_zero())
                problems.push_back("E_" + std::string(code(t)) + " = " + table[t].str() + " must be 0");
    }

    if (!problems.empty()) throw validation_error("invalid layout table: " + join(problems));
    table.delta = *delta;
    return table;
}

ExpectationTable load_layout_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open layout table '" + path + "'");
    return load_layout_table(in);
}

} // namespace crossvar
