#include "striple/polynomial.hpp"
#include "striple/rational_function.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace striple {

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        bool first = out.empty();
        if (c.sgn() < 0)
            out += '-';
        else if (!first)
            out += '+';
        Rational m = abs(c);
        if (k == 0) {
            out += m.str();
        } else {
            if (m != Rational(1)) {
                out += m.str();
                out += '*';
            }
            out += p.var();
            if (k != 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, char var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("parse_polynomial: empty input");

    Polynomial result(Rational(0), var);
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        size_t start = i;
        while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw std::invalid_argument("parse_polynomial: dangling sign");

        Rational coef(1);
        int expo = 0;
        size_t j = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            size_t cend = 0;
            while (cend < term.size() &&
                   (std::isdigit(static_cast<unsigned char>(term[cend])) || term[cend] == '/'))
                ++cend;
            coef = Rational::parse(term.substr(0, cend));
            j = cend;
            if (j < term.size() && term[j] == '*') ++j;
        }
        if (j < term.size()) {
            if (term[j] != var)
                throw std::invalid_argument(std::string("parse_polynomial: expected variable '") +
                                            var + "' in term '" + term + "'");
            ++j;
            expo = 1;
            if (j < term.size() && term[j] == '^') {
                ++j;
                size_t eend = j;
                while (eend < term.size() && std::isdigit(static_cast<unsigned char>(term[eend])))
                    ++eend;
                if (eend == j) throw std::invalid_argument("parse_polynomial: bad exponent");
                expo = std::stoi(term.substr(j, eend - j));
                j = eend;
            }
            if (j != term.size())
                throw std::invalid_argument("parse_polynomial: trailing junk in term '" + term + "'");
        }
        if (sign < 0) coef = -coef;
        result = result + Polynomial::monomial(coef, expo, var);
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

std::string to_string(const RationalFunction& f) {
    if (f.den() == Polynomial(Rational(1), f.var())) return to_string(f.num());
    std::ostringstream os;
    os << '(' << to_string(f.num()) << ")/(" << to_string(f.den()) << ')';
    return os.str();
}

RationalFunction parse_rational_function(std::string_view text, char var) {
    // accepts "poly" or "(poly)/(poly)"
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s[0] == '(') {
        auto close = s.find(")/(");
        if (close == std::string::npos || s.back() != ')')
            throw std::invalid_argument("parse_rational_function: expected (num)/(den)");
        return RationalFunction(parse_polynomial(s.substr(1, close - 1), var),
                                parse_polynomial(s.substr(close + 3, s.size() - close - 4), var));
    }
    return RationalFunction(parse_polynomial(s, var));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << to_string(f);
}

} // namespace striple
