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

#ifndef BRAUER_DETAIL_POLYOPS_HPP
#define BRAUER_DETAIL_POLYOPS_HPP

// Raw dense polynomial arithmetic on constant-first coefficient vectors over
// an explicit coefficient field. The empty vector is the zero polynomial.
// Shared by the element-level canonicalization in field.cpp and the public
// Polynomial class.

#include <utility>
#include <vector>

#include "brauer/field.hpp"

namespace brauer::detail {

using Coeffs = std::vector<FieldElement>;

void trim(Coeffs& c);
long deg(const Coeffs& c);  // -1 for zero
bool is_zero_poly(const Coeffs& c);
Coeffs poly_add(const FieldPtr& f, const Coeffs& a, const Coeffs& b);
Coeffs poly_sub(const FieldPtr& f, const Coeffs& a, const Coeffs& b);
Coeffs poly_mul(const FieldPtr& f, const Coeffs& a, const Coeffs& b);
Coeffs poly_scale(const Coeffs& a, const FieldElement& s);
/// Division with remainder; divisor must be nonzero.
std::pair<Coeffs, Coeffs> poly_divmod(const FieldPtr& f, const Coeffs& a, const Coeffs& b);
Coeffs poly_mod(const FieldPtr& f, const Coeffs& a, const Coeffs& b);
/// Monic gcd.
Coeffs poly_gcd(const FieldPtr& f, Coeffs a, Coeffs b);
Coeffs poly_make_monic(const Coeffs& a);
Coeffs poly_pow_mod(const FieldPtr& f, Coeffs base, Integer e, const Coeffs& mod);
FieldElement poly_eval(const FieldPtr& f, const Coeffs& a, const FieldElement& at);

}  // namespace brauer::detail

#endif  // BRAUER_DETAIL_POLYOPS_HPP
