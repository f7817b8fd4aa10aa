#ifndef STRIPLE_ERRORS_HPP
#define STRIPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace striple {

// Thrown when a rational function or curve coefficient is evaluated at a
// point where its denominator vanishes.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& msg) : std::domain_error(msg) {}
};

// Curve (or specialized curve) has vanishing discriminant.
class singular_curve_error : public std::domain_error {
public:
    explicit singular_curve_error(const std::string& msg) : std::domain_error(msg) {}
};

// A birational map was applied at a point of its exceptional locus.
class exceptional_point_error : public std::domain_error {
public:
    explicit exceptional_point_error(const std::string& msg) : std::domain_error(msg) {}
};

// A family construction collapsed (b = c, excluded parameter, excluded multiple).
class degenerate_error : public std::domain_error {
public:
    explicit degenerate_error(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace striple

#endif
