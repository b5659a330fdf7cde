#pragma once

#include <string>

#include "json.hpp"
#include "kacpal/hopf.hpp"
#include "kacpal/qpa.hpp"
#include "kacpal/rep.hpp"

namespace kacpal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "kacpal-report/1";

/// Coefficients in the ζ_N power basis as "num/den" strings.
Json to_json(const CycScalar& c);
/// {"n", "N", "degree"} of Q(ζ_N), N = 2n.
Json field_json(int n);
/// [{exponents: [...], coeff: [...]}, ...]
Json to_json(const RingElem& r);
/// [{perms: [[images], ...], ring: RingElem}, ...]
Json to_json(const HopfAlgebra& H, const HopfTensor& t);
Json to_json(const QpaElem& f);
Json to_json(const Matrix& M);

/// {name, anchor, pass, checked, witness?}; seconds are reported separately.
Json to_json(const CheckResult& c);

}  // namespace kacpal
