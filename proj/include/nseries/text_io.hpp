#ifndef NSERIES_TEXT_IO_HPP
#define NSERIES_TEXT_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include <nseries/free_algebra.hpp>
#include <nseries/hahn_series.hpp>
#include <nseries/operator.hpp>
#include <nseries/vaut_factors.hpp>

namespace nseries
{

inline constexpr int json_schema_version = 1;

// Terms in (length, lex) order, e.g. "1 - X0 + 1/2*X0 X1"; "0" for zero.
std::string format_free_series(const FreeSeries &p);

// alphabet_size == 0 infers the alphabet from the largest letter used.
FreeSeries parse_free_series(std::string_view text, std::size_t alphabet_size, std::size_t grade_bound);

// Terms in (weight, lex) order, e.g. "1 + 3/2*t^(1,0)"; "0" for zero.
std::string format_hahn(const HahnPoly &a);

// Accepts "t^(e1,...,ed)" and, for d = 1, "t^e" and bare "t".
HahnPoly parse_hahn(std::string_view text, const MonoidCtx &ctx, std::size_t weight_bound);

nlohmann::json free_series_to_json(const FreeSeries &p);
FreeSeries free_series_from_json(const nlohmann::json &j);

nlohmann::json hahn_to_json(const HahnPoly &a);
HahnPoly hahn_from_json(const nlohmann::json &j);

// Header "ctx=<descriptor> N=<bound>", then one "t^(..) -> <series>" line per
// basis exponent. Blank lines and '#' comments are ignored.
std::string format_op_table(const OpTable &op);
OpTable parse_op_table(std::string_view text);

// {"schema": 1, "ctx": ..., "N": ..., "mu": [[..]], "chi": ["p/q", ...], "residual": "<table text>"}
nlohmann::json factor_aut_to_json(const FactorAut &f);
FactorAut factor_aut_from_json(const nlohmann::json &j);

} // namespace nseries

#endif
