#include "kacpal/report.hpp"

namespace kacpal {

Json to_json(const CycScalar& c) {
    Json out = Json::array();
    for (const Rational& r : c.coeffs()) out.push_back(r.numerator().get_str() + "/" + r.denominator().get_str());
    return out;
}

Json field_json(int n) {
    const CycContext& K = CycContext::get(n);
    return Json{{"n", n}, {"N", K.N()}, {"degree", K.degree()}};
}

Json to_json(const RingElem& r) {
    Json out = Json::array();
    for (const auto& [key, c] : r.terms()) out.push_back(Json{{"exponents", r.exponents(key)}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const HopfAlgebra& H, const HopfTensor& t) {
    Json out = Json::array();
    for (const auto& [idx, r] : t.components()) {
        Json perms = Json::array();
        for (auto w : idx) {
            Json img = Json::array();
            for (int x : H.group().element(w).images()) img.push_back(x + 1);
            perms.push_back(std::move(img));
        }
        out.push_back(Json{{"perms", std::move(perms)}, {"ring", to_json(r)}});
    }
    return out;
}

Json to_json(const QpaElem& f) {
    Json out = Json::array();
    for (const auto& [alpha, c] : f.terms()) out.push_back(Json{{"exponents", alpha}, {"coeff", to_json(c)}});
    return out;
}

Json to_json(const Matrix& M) {
    Json out = Json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(to_json(M(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const CheckResult& c) {
    Json out{{"name", c.name}, {"anchor", c.anchor}, {"pass", c.pass}, {"checked", c.checked}};
    if (!c.witness.empty()) out["witness"] = c.witness;
    return out;
}

}  // namespace kacpal
