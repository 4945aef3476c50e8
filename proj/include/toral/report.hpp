#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "toral/assemble.hpp"
#include "toral/certificate.hpp"
#include "toral/gaff.hpp"
#include "toral/laurent.hpp"
#include "toral/problem.hpp"
#include "toral/structure.hpp"

// JSON renderings shared by the CLI and the documented report schema
// (docs/schema.md). Keys keep insertion order so output is byte-stable.
namespace toral::report {

using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational &z); // string, e.g. "1/2+3i"
Json to_json(const LatticeVector &v);
Json to_json(const IntMatrix &m);
Json to_json(const LaurentPoly &p, std::span<const std::string> vars);
Json to_json(const ProblemInput &problem);
Json to_json(const Quasitorus &q);
Json to_json(const SplitResult &split, std::span<const std::string> vars);
Json to_json(const GaffGroup &group);
Json to_json(const AutStructure &a);
Json to_json(const AutoCertificate &cert);

// Accepts the to_json(AutoCertificate) layout, or {"monomial_map": {"exponents", "scalars"}}
// for a hand-written map; the latter is completed with certificate_from_monomial_map.
AutoCertificate certificate_from_json(const Json &j, const LaurentPoly &h);

// "Z/2 × Z/2" or "1"
std::string describe_finite_part(const Quasitorus &q);

} // namespace toral::report
