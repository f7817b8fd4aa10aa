/**
 * @file display.hpp
 * @brief Text rendering for towered scalars (bridge map components).
 */
#ifndef STRIPLE_DISPLAY_HPP
#define STRIPLE_DISPLAY_HPP

#include <string>

#include "striple/quad_ext.hpp"
#include "striple/rational_function.hpp"

namespace striple {

inline std::string scalar_text(const Rational& r) { return r.str(); }
inline std::string scalar_text(const RationalFunction& f) {
    std::string s = to_string(f);
    if (f.num().degree() > 0 && f.den().is_constant()) return "(" + s + ")";
    return s;
}

template <class S>
std::string poly_text(const BasicPolynomial<S>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        S c = p.coeff(k);
        if (c == S{}) continue;
        std::string cs = scalar_text(c);
        if (!out.empty()) {
            if (cs.rfind('-', 0) == 0) {
                out += " - ";
                cs.erase(cs.begin());
            } else {
                out += " + ";
            }
        }
        if (k == 0) {
            out += cs;
            continue;
        }
        if (cs == "-1") {
            out += "-";
        } else if (cs != "1") {
            out += cs;
            out += "*";
        }
        out += p.var();
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

template <class S>
std::string ratfunc_text(const BasicRationalFunction<S>& f) {
    if (f.den() == BasicPolynomial<S>(S(1), f.var())) return poly_text(f.num());
    return "(" + poly_text(f.num()) + ")/(" + poly_text(f.den()) + ")";
}

// c0 + c1*r with r the square-root generator (the quartic z or the curve y)
template <class F>
std::string quadext_text(const QuadExt<F>& e, const std::string& radical) {
    std::string out;
    if (!(e.c0() == F{}) || e.c1() == F{}) out += ratfunc_text(e.c0());
    if (!(e.c1() == F{})) {
        if (!out.empty()) out += " + ";
        out += "(" + ratfunc_text(e.c1()) + ")*" + radical;
    }
    return out;
}

} // namespace striple

#endif
