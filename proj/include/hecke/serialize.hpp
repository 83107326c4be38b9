#pragma once

#include <json.hpp>
#include <string>

#include "hecke/dihedral.hpp"
#include "hecke/equiv.hpp"

namespace hecke {

using json = nlohmann::json;

json to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

json to_json(const QuadInt& x);
QuadInt quadint_from_json(const QuadField& K, const json& j);

json field_summary(const QuadField& K);

// [{p, label, exponent}]
json to_json(const IntegralIdeal& I);
IntegralIdeal ideal_from_json(const QuadField& K, const json& j);

// Comma or '*' separated factors "p:kind:label:exponent"; inert and ramified factors may
// drop the label ("p:kind:exponent"). "1" or "" is the unit ideal.
IntegralIdeal parse_conductor(const QuadField& K, const std::string& s);

json to_json(const HeckeCharacter& chi);
HeckeCharacter character_from_json(const json& j);

json to_json(const CoeffTable& t);
json to_json(const FormDescriptor& f);
json to_json(const EquivCertificate& c);
json to_json(const dihedral::StructureReport& r);
json to_json(const dihedral::FaithfulnessReport& r);

} // namespace hecke
