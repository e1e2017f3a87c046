#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "crossvar/census.hpp"
#include "crossvar/graph.hpp"
#include "crossvar/rational.hpp"

namespace crossvar {

/// Classes of ordered pairs of Q elements, by shared edges (τ) and shared vertices (φ).
enum class ProductType : std::uint8_t { t00, t24, t13, t12, t04, t03, t021, t022, t01 };

inline constexpr std::array<ProductType, 9> all_product_types{
    ProductType::t00, ProductType::t24, ProductType::t13,  ProductType::t12, ProductType::t04,
    ProductType::t03, ProductType::t021, ProductType::t022, ProductType::t01};

/// The seven types whose expectation is not identically zero.
inline constexpr std::array<ProductType, 7> contributing_product_types{
    ProductType::t24, ProductType::t13, ProductType::t12, ProductType::t04,
    ProductType::t03, ProductType::t021, ProductType::t022};

constexpr std::size_t index_of(ProductType t) { return static_cast<std::size_t>(t); }

/// "00", "24", ..., "022".
std::string_view code(ProductType t);
std::optional<ProductType> product_type_from_code(std::string_view code);
int tau(ProductType t);
int phi(ProductType t);
/// Multiplier a_ω in f_ω = a_ω · n_G(F_ω).
int subgraph_multiplier(ProductType t);
/// The subgraph F_ω whose count gives f_ω.
Pattern subgraph_pattern(ProductType t);

/// An element of Q: two vertex-disjoint edges.
struct IndependentPair {
    edge first;
    edge second;
};

/**
 * @brief f_ω for the nine product types, counted over ordered pairs of Q × Q.
 *
 * When `split_00_01` is false only f_00 + f_01 is known; it is stored in the
 * 00 slot and the 01 slot is zero.
 */
struct FrequencyVector {
    std::array<Integer, 9> f{};
    bool split_00_01 = true;

    const Integer& operator[](ProductType t) const { return f[index_of(t)]; }
    Integer& operator[](ProductType t) { return f[index_of(t)]; }

    Integer total() const;
    Integer joint_00_01() const { return f[index_of(ProductType::t00)] + f[index_of(ProductType::t01)]; }
    /// Equal on the seven contributing types and on f_00 + f_01.
    bool same_contributing(const FrequencyVector& other) const;
};

/// A random layout: δ and E*[γ_ω] for every type.
struct ExpectationTable {
    std::string name;
    Rational delta;
    std::array<Rational, 9> gamma{};

    const Rational& operator[](ProductType t) const { return gamma[index_of(t)]; }
};

/// Type of the pair (p1, p2). Both must be independent pairs of edges of g.
ProductType classify_pair(const Graph& g, const IndependentPair& p1, const IndependentPair& p2);

/// Every element of Q in edge order.
std::vector<IndependentPair> enumerate_q(const Graph& g);

/// Classifies all of Q × Q. Throws oracle_limit_exceeded when q² exceeds the budget.
FrequencyVector frequencies_brute(const Graph& g, const OracleLimits& limits = {});

/// Closed forms in terms of the census; f_00 + f_01 via the q² complement.
FrequencyVector frequencies_from_census(const CensusReport& c, const Integer& m);

/// f_ω = a_ω n_G(F_ω) with brute-force subgraph counts (all nine types).
FrequencyVector frequencies_from_subgraph_counts(const Graph& g, const OracleLimits& limits = {});

/// Uniformly random linear arrangements: δ = 1/3.
const ExpectationTable& builtin_rla_table();

/**
 * @brief Parses a layout table.
 *
 * Lines are `delta = p/q`, `p_<code> = p/q` or `E_<code> = p/q`, optional
 * `name = <label>`, with '#' comments. Every type needs p or E; when p is
 * given E = p − δ². Throws validation_error listing every offending entry.
 */
ExpectationTable load_layout_table(std::istream& in);
ExpectationTable load_layout_table_file(const std::string& path);

} // namespace crossvar
