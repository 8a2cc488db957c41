#pragma once

#include <string>

#include <json.hpp>

#include "psi/bounds.hpp"
#include "psi/hermitian.hpp"
#include "psi/inertia.hpp"
#include "psi/pattern_search.hpp"
#include "psi/psi.hpp"
#include "psi/real_poly.hpp"
#include "psi/reduction.hpp"

namespace psi {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

Json to_json(const MultiIndex& alpha);
MultiIndex multi_index_from_json(const Json& j);

/// {"n": 3, "terms": [{"exp": [2,1,3], "coef": "-1"}]}
Json to_json(const RealSparsePoly& p);
RealSparsePoly poly_from_json(const Json& j);

/// {"n": 2, "entries": [{"alpha": [1,0], "beta": [0,1], "re": "1/2", "im": "-1"}]}
/// Only the upper triangle (alpha >= beta in basis order) is written.
Json to_json(const HermitianPoly& r);
HermitianPoly herm_from_json(const Json& j);

/// {"n": 3, "D": 6, "pos": [[..]], "neg": [[..]]}
Json to_json(const SignPattern& p);
SignPattern pattern_from_json(const Json& j);

Json to_json(const SignaturePair& s);
Json to_json(const Inertia& i);
Json to_json(const PsiReport& r);
Json to_json(const BoundReport& r);
Json to_json(const PigeonholeCertificate& c);
Json to_json(const SearchResult& r);
Json to_json(const ReductionResult& r);

}  // namespace psi
