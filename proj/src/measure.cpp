#include "blgeo/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace blgeo {

MeasureValue::MeasureValue(Rational q, Rational g) : q_(std::move(q)), g_(std::move(g))
{
    if (q_ < 0) throw std::invalid_argument("MeasureValue: negative rational part");
    if (g_ <= 0) throw std::invalid_argument("MeasureValue: non-positive Gram part");
    if (q_ == 0) {
        g_ = 1;
        return;
    }
    // q sqrt(a/b) = (q/b) sqrt(a b)
    Integer radicand = g_.get_num() * g_.get_den();
    q_ /= Rational(g_.get_den());
    Integer outside = 1;
    for (unsigned long p = 2; p < 1000; ++p) {
        Integer sq = p * p;
        if (sq > radicand) break;
        while (mpz_divisible_p(radicand.get_mpz_t(), sq.get_mpz_t())) {
            radicand /= sq;
            outside *= p;
        }
    }
    if (mpz_perfect_square_p(radicand.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
        outside *= root;
        radicand = 1;
    }
    q_ *= Rational(outside);
    g_ = Rational(radicand);
}

double MeasureValue::approx() const { return q_.get_d() * std::sqrt(g_.get_d()); }

}  // namespace blgeo
