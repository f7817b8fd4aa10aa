/**
 * @file quad_ext.hpp
 * @brief Arithmetic in F[y]/(y^2 - f): elements c0 + c1*y over a field F.
 *
 * Used to run the bridge maps on the generic point of a curve or quartic, so
 * that map components come out as explicit rational functions and round-trip
 * identities can be checked symbolically. Constants may be built without a
 * modulus; the modulus is picked up from whichever operand carries one.
 */
#ifndef STRIPLE_QUAD_EXT_HPP
#define STRIPLE_QUAD_EXT_HPP

#include <stdexcept>
#include <utility>

namespace striple {

template <class F>
class QuadExt {
private:
    F c0_, c1_;
    F mod_;
    bool has_mod_ = false;

    static F merged_mod(const QuadExt& a, const QuadExt& b, bool& has) {
        if (a.has_mod_ && b.has_mod_ && !(a.mod_ == b.mod_))
            throw std::logic_error("QuadExt: mixing different moduli");
        has = a.has_mod_ || b.has_mod_;
        return a.has_mod_ ? a.mod_ : b.mod_;
    }
    QuadExt(F c0, F c1, F mod, bool has)
        : c0_(std::move(c0)), c1_(std::move(c1)), mod_(std::move(mod)), has_mod_(has) {}

public:
    QuadExt() = default;
    QuadExt(int n) : c0_(n) {}
    explicit QuadExt(F c) : c0_(std::move(c)) {}

    // the class y of the quotient, with y^2 = modulus
    static QuadExt generator(F modulus) {
        return QuadExt(F{}, F(1), std::move(modulus), true);
    }

    const F& c0() const { return c0_; }
    const F& c1() const { return c1_; }
    bool is_scalar() const { return c1_ == F{}; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    friend QuadExt operator-(const QuadExt& a) {
        return QuadExt(-a.c0_, -a.c1_, a.mod_, a.has_mod_);
    }
    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        bool has;
        F m = merged_mod(a, b, has);
        return QuadExt(a.c0_ + b.c0_, a.c1_ + b.c1_, std::move(m), has);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        bool has;
        F m = merged_mod(a, b, has);
        F cross = a.c1_ * b.c1_;
        F c0 = a.c0_ * b.c0_;
        if (!(cross == F{})) {
            if (!has) throw std::logic_error("QuadExt: product of generators needs a modulus");
            c0 = c0 + cross * m;
        }
        return QuadExt(std::move(c0), a.c0_ * b.c1_ + a.c1_ * b.c0_, std::move(m), has);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b == QuadExt()) throw std::domain_error("QuadExt: division by zero");
        if (b.c1_ == F{}) {
            bool has;
            F m = merged_mod(a, b, has);
            return QuadExt(a.c0_ / b.c0_, a.c1_ / b.c0_, std::move(m), has);
        }
        bool has;
        F m = merged_mod(a, b, has);
        F nrm = b.c0_ * b.c0_ - b.c1_ * b.c1_ * m; // conjugate norm
        QuadExt conj(b.c0_, -b.c1_, m, has);
        QuadExt prod = a * conj;
        return QuadExt(prod.c0_ / nrm, prod.c1_ / nrm, std::move(m), has);
    }
};

} // namespace striple

#endif
