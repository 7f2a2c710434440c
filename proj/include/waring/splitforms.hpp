#ifndef WARING_SPLITFORMS_HPP
#define WARING_SPLITFORMS_HPP

#include "waring/mpoly.hpp"
#include "waring/results.hpp"

namespace waring {

/// Families with proven rank additivity and locus-union behavior.
enum class BlockFamily {
    MonomialAllGe2,   // monomial, every exponent >= 2
    MonomialMinExp1,  // monomial with some exponent 1 (two-monomial shape)
    BinaryNonMax,     // binary form of less than maximal rank
    PowerSum,         // x0^a (x1^b + ... + xn^b), a+1 >= b >= 3, n >= 2
    PowerSumWithX0,   // x0^a (x0^b + x1^b + ... + xn^b)
    CIForm,           // x0^a G, a >= 2, G^perp a CI generated in degrees >= a+1
    Unsupported
};

const char* block_family_name(BlockFamily f);

struct SplitBlock {
    std::vector<int> vars;  // ambient variable indices, increasing
    Poly form{0};           // in block-local variables
    BlockFamily family = BlockFamily::Unsupported;
    int rank = -1;          // certified block rank, or -1
    bool rank_certified = false;
    std::string rank_basis;
};

/// Variable-disjoint block structure: connected components of the variable
/// co-occurrence graph of the support.
struct SplitDecomposition {
    std::vector<SplitBlock> blocks;
};

SplitDecomposition split_detect(const Poly& F);

RankResult split_rank(const Poly& F);
RankResult split_rank_impl(const Poly& F, const SplitDecomposition& sd);

LocusDescription split_locus_impl(const Poly& F, const SplitDecomposition& sd);

/// P in W_F iff P is supported on exactly one block and its projection lies
/// in that block's Waring locus; degree 2 is rejected (see quadrics).
Membership split_locus_membership(const Poly& F, const ProjPoint& P);

/// The reducible family x0^a (x1^b+...+xn^b) / x0^a (x0^b+...+xn^b).
struct ReducibleFamily {
    bool with_x0 = false;
    int pivot = 0, a = 0, b = 0, n = 0;
    int rank = 0;
    LocusDescription locus;
};

ReducibleFamily reducible_family(const Poly& F);

Membership reducible_membership(const Poly& F, const ProjPoint& P);

struct Derivation {
    Poly dual_form{0};
    bool verified_exactly = false;  // rank recomputed on the image
    std::string basis;              // how preservation is known
};

/// A linear derivation with rk(d o F) = rk(F), per supported family.
Derivation find_rank_preserving_derivation(const Poly& F, BlockFamily family);

/// Hilbert length of the apolar algebra: sum of catalecticant ranks.
int hilbert_length(const Poly& F);

/// Exact check of length T/(M1+M2)^perp == length T/M1^perp + length T/M2^perp - 2
/// for disjoint monomials, min exponent of M1 equal to 1, degree >= 3.
bool length_additivity_check(const Poly& M1, const Poly& M2);

}  // namespace waring

#endif
