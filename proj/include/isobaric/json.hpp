#pragma once

#include "isobaric/companion.hpp"
#include "isobaric/hessenberg.hpp"
#include "isobaric/isopoly.hpp"

#include <json.hpp>

namespace isobaric {

/// {"n": int, "k": int, "terms": [{"alpha": [ints], "coeff": "p/q"}]}
nlohmann::json to_json(const IsobaricPoly& p);
IsobaricPoly poly_from_json(const nlohmann::json& j);

/// {"n": int, "super": +-1, "cells": [[{"coeff": "p/q", "t": m|null}, ...], ...]}
/// with all n x n cells listed row by row.
nlohmann::json to_json(const HessenbergMatrix& m);
HessenbergMatrix hessenberg_from_json(const nlohmann::json& j);

/// {"k": int, "rows": [lo, hi], "cells": [[...], ...]}; numeric cells are
/// rational strings, symbolic cells polynomial objects.
nlohmann::json to_json(const CompanionWindow& w);
nlohmann::json to_json(const SymbolicWindow& w);

} // namespace isobaric
