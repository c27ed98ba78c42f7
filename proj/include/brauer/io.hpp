/*
   Copyright 2026 the brauercalc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_IO_HPP
#define BRAUER_IO_HPP

#include <json.hpp>

#include "brauer/algebra.hpp"
#include "brauer/circles.hpp"
#include "brauer/cyclic.hpp"

namespace brauer {

using Json = nlohmann::json;

// Field descriptors and values serialize to JSON:
//  - prime-field elements as integers 0..p-1,
//  - extension elements as constant-first coefficient arrays,
//  - rationals as "num/den" strings with den > 0 and gcd 1,
//  - rational functions as {"num": [...], "den": [...]} with monic
//    denominator.

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& f, const Json& j);

Json algebra_to_json(const StructureConstantAlgebra& a);
StructureConstantAlgebra algebra_from_json(const Json& j);

Json class_to_json(const CyclicBrauerClass& c);
CyclicBrauerClass class_from_json(const Json& j);

Json split_bundle_to_json(const SplitLineBundle& l);
Json galois_bundle_to_json(const GaloisLineBundle& l);
/// Bundle literal: {"circle": {...}, "lambda": [...]} for the split form or
/// {"circle": {...}, "lambda1": <element>} for the Galois form.
SplitLineBundle split_bundle_from_json(const Json& j);
GaloisLineBundle galois_bundle_from_json(const Json& j);

Json curve_graph_to_json(const CurveGraph& g);

/**
 * Compact field names accepted on the command line and in task documents:
 * "Q", "Qi", "F<q>" (prime power, canonical modulus), "F<q>t", and cyclic
 * extensions written "K/k" ("F9/F3", "F9t/F3t", "Qi/Q").
 */
FieldPtr parse_field_name(const std::string& name);
/// Extension shorthand "K/k"; plain names are rejected.
FieldPtr parse_extension_name(const std::string& name);

/// Parse an element literal: JSON syntax, or a bare integer / "num/den"
/// string / comma-free literal matched to the field's kind. The string "t"
/// and polynomial-in-t forms like "t^2+1" work for rational function fields.
FieldElement parse_element(const FieldPtr& f, const std::string& text);

}  // namespace brauer

#endif  // BRAUER_IO_HPP
