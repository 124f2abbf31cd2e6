#pragma once

#include <string>

#include "json.hpp"

#include "kustab/chern.hpp"
#include "kustab/k3.hpp"
#include "kustab/lattice.hpp"
#include "kustab/moduli.hpp"
#include "kustab/mutation.hpp"
#include "kustab/report.hpp"
#include "kustab/tilt.hpp"

namespace kustab {

using Json = nlohmann::json;

/// Parses text, reporting the line and column of a syntax error as an InputError.
Json parse_json(const std::string& text);

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const ExtRat& r);
Json to_json(const GaussRat& z);
Json to_json(const Int& n);
Int int_from_json(const Json& j);
Json to_json(const IntVector& v);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const ChernY& e);
ChernY chern_y_from_json(const Json& j);
Json to_json(const ChernSigma& e);
ChernSigma chern_sigma_from_json(const Json& j);
Json to_json(const TwistedClass& v);

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const IntegralLattice& l);
IntegralLattice lattice_from_json(const Json& j);

Json to_json(const EulerContext& ctx);
EulerContext context_from_json(const Json& j);

EtaVector eta_from_json(const Json& j);

Json to_json(const Report& r);
Json to_json(const MukaiVector& v);
Json to_json(const ModuliReport& r);
Json to_json(const WallSolution& w);
Json to_json(const Enumeration& e);
Json to_json(const CriterionResult& r);
Json to_json(const P0Result& r);
Json to_json(const PeriodDivisorLabel& l);
Json to_json(const StarStarPrime& s);
Json to_json(const H2Structure& h);

/// Parse-then-serialize for lattice, Euler context, and Chern documents.
/// Keys come out sorted; output is indented by two spaces.
std::string io_roundtrip(const std::string& document);

std::string read_file(const std::string& path);

}  // namespace kustab
