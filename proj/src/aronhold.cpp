#include "waring/aronhold.hpp"

namespace waring {

using Q = GaussRat;

GaussRat aronhold_S(const std::array<GaussRat, 10>& c) {
    Q r(0);
    r -= Q(144)*c[0]*c[3]*c[7]*c[9];
    r += Q(48)*c[0]*c[3]*c[8]*c[8];
    r += Q(216)*c[0]*c[4]*c[6]*c[9];
    r -= Q(24)*c[0]*c[4]*c[7]*c[8];
    r -= Q(144)*c[0]*c[5]*c[6]*c[8];
    r += Q(48)*c[0]*c[5]*c[7]*c[7];
    r += Q(48)*c[1]*c[1]*c[7]*c[9];
    r -= Q(16)*c[1]*c[1]*c[8]*c[8];
    r -= Q(144)*c[1]*c[2]*c[6]*c[9];
    r += Q(16)*c[1]*c[2]*c[7]*c[8];
    r -= Q(24)*c[1]*c[3]*c[4]*c[9];
    r += Q(16)*c[1]*c[3]*c[5]*c[8];
    r += Q(8)*c[1]*c[4]*c[4]*c[8];
    r -= Q(24)*c[1]*c[4]*c[5]*c[7];
    r += Q(48)*c[1]*c[5]*c[5]*c[6];
    r += Q(48)*c[2]*c[2]*c[6]*c[8];
    r -= Q(16)*c[2]*c[2]*c[7]*c[7];
    r += Q(48)*c[2]*c[3]*c[3]*c[9];
    r -= Q(24)*c[2]*c[3]*c[4]*c[8];
    r += Q(16)*c[2]*c[3]*c[5]*c[7];
    r += Q(8)*c[2]*c[4]*c[4]*c[7];
    r -= Q(24)*c[2]*c[4]*c[5]*c[6];
    r -= Q(16)*c[3]*c[3]*c[5]*c[5];
    r += Q(8)*c[3]*c[4]*c[4]*c[5];
    r -= Q(1)*c[4]*c[4]*c[4]*c[4];
    return r;
}

GaussRat aronhold_T(const std::array<GaussRat, 10>& c) {
    Q r(0);
    r += Q(5832)*c[0]*c[0]*c[6]*c[6]*c[9]*c[9];
    r -= Q(3888)*c[0]*c[0]*c[6]*c[7]*c[8]*c[9];
    r += Q(864)*c[0]*c[0]*c[6]*c[8]*c[8]*c[8];
    r += Q(864)*c[0]*c[0]*c[7]*c[7]*c[7]*c[9];
    r -= Q(216)*c[0]*c[0]*c[7]*c[7]*c[8]*c[8];
    r -= Q(3888)*c[0]*c[1]*c[3]*c[6]*c[9]*c[9];
    r += Q(1296)*c[0]*c[1]*c[3]*c[7]*c[8]*c[9];
    r -= Q(288)*c[0]*c[1]*c[3]*c[8]*c[8]*c[8];
    r += Q(1296)*c[0]*c[1]*c[4]*c[6]*c[8]*c[9];
    r -= Q(864)*c[0]*c[1]*c[4]*c[7]*c[7]*c[9];
    r += Q(144)*c[0]*c[1]*c[4]*c[7]*c[8]*c[8];
    r += Q(1296)*c[0]*c[1]*c[5]*c[6]*c[7]*c[9];
    r -= Q(864)*c[0]*c[1]*c[5]*c[6]*c[8]*c[8];
    r += Q(144)*c[0]*c[1]*c[5]*c[7]*c[7]*c[8];
    r += Q(1296)*c[0]*c[2]*c[3]*c[6]*c[8]*c[9];
    r -= Q(864)*c[0]*c[2]*c[3]*c[7]*c[7]*c[9];
    r += Q(144)*c[0]*c[2]*c[3]*c[7]*c[8]*c[8];
    r += Q(1296)*c[0]*c[2]*c[4]*c[6]*c[7]*c[9];
    r -= Q(864)*c[0]*c[2]*c[4]*c[6]*c[8]*c[8];
    r += Q(144)*c[0]*c[2]*c[4]*c[7]*c[7]*c[8];
    r -= Q(3888)*c[0]*c[2]*c[5]*c[6]*c[6]*c[9];
    r += Q(1296)*c[0]*c[2]*c[5]*c[6]*c[7]*c[8];
    r -= Q(288)*c[0]*c[2]*c[5]*c[7]*c[7]*c[7];
    r += Q(864)*c[0]*c[3]*c[3]*c[3]*c[9]*c[9];
    r -= Q(864)*c[0]*c[3]*c[3]*c[4]*c[8]*c[9];
    r -= Q(864)*c[0]*c[3]*c[3]*c[5]*c[7]*c[9];
    r += Q(576)*c[0]*c[3]*c[3]*c[5]*c[8]*c[8];
    r += Q(648)*c[0]*c[3]*c[4]*c[4]*c[7]*c[9];
    r += Q(72)*c[0]*c[3]*c[4]*c[4]*c[8]*c[8];
    r += Q(1296)*c[0]*c[3]*c[4]*c[5]*c[6]*c[9];
    r -= Q(720)*c[0]*c[3]*c[4]*c[5]*c[7]*c[8];
    r -= Q(864)*c[0]*c[3]*c[5]*c[5]*c[6]*c[8];
    r += Q(576)*c[0]*c[3]*c[5]*c[5]*c[7]*c[7];
    r -= Q(540)*c[0]*c[4]*c[4]*c[4]*c[6]*c[9];
    r -= Q(36)*c[0]*c[4]*c[4]*c[4]*c[7]*c[8];
    r += Q(648)*c[0]*c[4]*c[4]*c[5]*c[6]*c[8];
    r += Q(72)*c[0]*c[4]*c[4]*c[5]*c[7]*c[7];
    r -= Q(864)*c[0]*c[4]*c[5]*c[5]*c[6]*c[7];
    r += Q(864)*c[0]*c[5]*c[5]*c[5]*c[6]*c[6];
    r += Q(864)*c[1]*c[1]*c[1]*c[6]*c[9]*c[9];
    r -= Q(288)*c[1]*c[1]*c[1]*c[7]*c[8]*c[9];
    r += Q(64)*c[1]*c[1]*c[1]*c[8]*c[8]*c[8];
    r -= Q(864)*c[1]*c[1]*c[2]*c[6]*c[8]*c[9];
    r += Q(576)*c[1]*c[1]*c[2]*c[7]*c[7]*c[9];
    r -= Q(96)*c[1]*c[1]*c[2]*c[7]*c[8]*c[8];
    r -= Q(216)*c[1]*c[1]*c[3]*c[3]*c[9]*c[9];
    r += Q(144)*c[1]*c[1]*c[3]*c[4]*c[8]*c[9];
    r += Q(144)*c[1]*c[1]*c[3]*c[5]*c[7]*c[9];
    r -= Q(96)*c[1]*c[1]*c[3]*c[5]*c[8]*c[8];
    r += Q(72)*c[1]*c[1]*c[4]*c[4]*c[7]*c[9];
    r -= Q(48)*c[1]*c[1]*c[4]*c[4]*c[8]*c[8];
    r -= Q(864)*c[1]*c[1]*c[4]*c[5]*c[6]*c[9];
    r += Q(144)*c[1]*c[1]*c[4]*c[5]*c[7]*c[8];
    r += Q(576)*c[1]*c[1]*c[5]*c[5]*c[6]*c[8];
    r -= Q(216)*c[1]*c[1]*c[5]*c[5]*c[7]*c[7];
    r -= Q(864)*c[1]*c[2]*c[2]*c[6]*c[7]*c[9];
    r += Q(576)*c[1]*c[2]*c[2]*c[6]*c[8]*c[8];
    r -= Q(96)*c[1]*c[2]*c[2]*c[7]*c[7]*c[8];
    r += Q(144)*c[1]*c[2]*c[3]*c[3]*c[8]*c[9];
    r -= Q(720)*c[1]*c[2]*c[3]*c[4]*c[7]*c[9];
    r += Q(144)*c[1]*c[2]*c[3]*c[4]*c[8]*c[8];
    r += Q(1296)*c[1]*c[2]*c[3]*c[5]*c[6]*c[9];
    r -= Q(48)*c[1]*c[2]*c[3]*c[5]*c[7]*c[8];
    r += Q(648)*c[1]*c[2]*c[4]*c[4]*c[6]*c[9];
    r -= Q(24)*c[1]*c[2]*c[4]*c[4]*c[7]*c[8];
    r -= Q(720)*c[1]*c[2]*c[4]*c[5]*c[6]*c[8];
    r += Q(144)*c[1]*c[2]*c[4]*c[5]*c[7]*c[7];
    r += Q(144)*c[1]*c[2]*c[5]*c[5]*c[6]*c[7];
    r += Q(144)*c[1]*c[3]*c[3]*c[4]*c[5]*c[9];
    r -= Q(96)*c[1]*c[3]*c[3]*c[5]*c[5]*c[8];
    r -= Q(36)*c[1]*c[3]*c[4]*c[4]*c[4]*c[9];
    r -= Q(24)*c[1]*c[3]*c[4]*c[4]*c[5]*c[8];
    r += Q(144)*c[1]*c[3]*c[4]*c[5]*c[5]*c[7];
    r -= Q(288)*c[1]*c[3]*c[5]*c[5]*c[5]*c[6];
    r += Q(12)*c[1]*c[4]*c[4]*c[4]*c[4]*c[8];
    r -= Q(36)*c[1]*c[4]*c[4]*c[4]*c[5]*c[7];
    r += Q(72)*c[1]*c[4]*c[4]*c[5]*c[5]*c[6];
    r += Q(864)*c[2]*c[2]*c[2]*c[6]*c[6]*c[9];
    r -= Q(288)*c[2]*c[2]*c[2]*c[6]*c[7]*c[8];
    r += Q(64)*c[2]*c[2]*c[2]*c[7]*c[7]*c[7];
    r += Q(576)*c[2]*c[2]*c[3]*c[3]*c[7]*c[9];
    r -= Q(216)*c[2]*c[2]*c[3]*c[3]*c[8]*c[8];
    r -= Q(864)*c[2]*c[2]*c[3]*c[4]*c[6]*c[9];
    r += Q(144)*c[2]*c[2]*c[3]*c[4]*c[7]*c[8];
    r += Q(144)*c[2]*c[2]*c[3]*c[5]*c[6]*c[8];
    r -= Q(96)*c[2]*c[2]*c[3]*c[5]*c[7]*c[7];
    r += Q(72)*c[2]*c[2]*c[4]*c[4]*c[6]*c[8];
    r -= Q(48)*c[2]*c[2]*c[4]*c[4]*c[7]*c[7];
    r += Q(144)*c[2]*c[2]*c[4]*c[5]*c[6]*c[7];
    r -= Q(216)*c[2]*c[2]*c[5]*c[5]*c[6]*c[6];
    r -= Q(288)*c[2]*c[3]*c[3]*c[3]*c[5]*c[9];
    r += Q(72)*c[2]*c[3]*c[3]*c[4]*c[4]*c[9];
    r += Q(144)*c[2]*c[3]*c[3]*c[4]*c[5]*c[8];
    r -= Q(96)*c[2]*c[3]*c[3]*c[5]*c[5]*c[7];
    r -= Q(36)*c[2]*c[3]*c[4]*c[4]*c[4]*c[8];
    r -= Q(24)*c[2]*c[3]*c[4]*c[4]*c[5]*c[7];
    r += Q(144)*c[2]*c[3]*c[4]*c[5]*c[5]*c[6];
    r += Q(12)*c[2]*c[4]*c[4]*c[4]*c[4]*c[7];
    r -= Q(36)*c[2]*c[4]*c[4]*c[4]*c[5]*c[6];
    r += Q(64)*c[3]*c[3]*c[3]*c[5]*c[5]*c[5];
    r -= Q(48)*c[3]*c[3]*c[4]*c[4]*c[5]*c[5];
    r += Q(12)*c[3]*c[4]*c[4]*c[4]*c[4]*c[5];
    r -= Q(1)*c[4]*c[4]*c[4]*c[4]*c[4]*c[4];
    return r;
}

std::array<GaussRat, 10> cubic_coefficient_array(const Poly& F) {
    require_homogeneous(F, "cubic invariants");
    if (F.nvars() != 3 || F.degree() != 3)
        throw std::invalid_argument("cubic invariants: ternary cubic required");
    std::array<GaussRat, 10> c;
    auto basis = monomial_basis(3, 3);
    for (std::size_t i = 0; i < 10; ++i) c[i] = F.coeff(basis[i]);
    return c;
}

GaussRat cubic_discriminant(const Poly& F) {
    auto c = cubic_coefficient_array(F);
    Q S = aronhold_S(c), T = aronhold_T(c);
    return T * T + S * S * S;
}

}  // namespace waring
