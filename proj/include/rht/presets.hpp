#pragma once

#include "rht/presentation.hpp"

#include <optional>
#include <string>

namespace rht {

// The central family: 2k+2 degree-one generators u1..uk, v1..vk, g, gc.
// u/v carry weight 1, g/gc weight 2; products of distinct u/v pairs vanish
// except u_i^v_i, which are all identified with u1^v1; d(gc) = u1^v1.
Presentation model_MR(int k);

// Cohomology of the genus-g surface with zero differential: a1..ag, b1..bg
// in degree 1 and weight 1, one symplectic class a1^b1.
Presentation model_curve(int genus);

// One circle generator; the smallest weighted example.
Presentation model_b1_one();

// The k = 1 member under its usual name.
Presentation model_kodaira_thurston();

// Four generators e1..e4 with d(e3) = e1^e2, d(e4) = e1^e3 and weights
// 1, 1, 2, 3; carries a length-four non-vanishing Massey product.
Presentation model_filiform();

// "mr:k", "curve:g", "b1one", "kt", "filiform" -> preset; nullopt otherwise.
std::optional<Presentation> parse_preset_id(const std::string& id);

}  // namespace rht
