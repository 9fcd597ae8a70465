#pragma once

#include <string>

#include <json.hpp>

#include "kwong/exact_engine.hpp"
#include "kwong/float_engine.hpp"
#include "kwong/matrix.hpp"
#include "kwong/oracle.hpp"
#include "kwong/signs.hpp"
#include "kwong/sweep.hpp"

namespace kwong {

using nlohmann::json;

/// Row-major CSV; exact entries as "a/b", binary64 entries with shortest
/// round-trip formatting.
std::string to_csv(const Matrix<Rational>& m);
std::string to_csv(const Matrix<double>& m);
std::string to_csv(const SymMatrix<Rational>& m);
std::string to_csv(const SymMatrix<double>& m);

json to_json(const Inertia& in);
json to_json(const FamilySpec<Rational>& spec);
json to_json(const FamilySpec<double>& spec);
json to_json(const SymMatrix<Rational>& m);
json to_json(const SymMatrix<double>& m);
json to_json(const Matrix<Rational>& m);
json to_json(const Matrix<double>& m);
json to_json(const PivotLog& log);
json to_json(const SpectrumReport& rep);
json to_json(const PredictionCase& pred, int n, double r);
json to_json(const SsrReport& rep);
json to_json(const SweepRecord& rec);
json to_json(const TransitionReport& rep);

} // namespace kwong
