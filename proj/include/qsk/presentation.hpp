#ifndef QSK_PRESENTATION_HPP
#define QSK_PRESENTATION_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

enum class Rel { Poly, Ext, Trunc };

/* One algebra generator of a declared homology ring.  Generators render as
   family(index...); almost all carry a single index. */
struct SpaceGen {
    std::string family;
    std::vector<int> index;
    int dim = 0;
    Rel rel = Rel::Poly;
    int height = 0;   // Trunc only; a power of p
    bool primitive = true;
};

/* Monomial over the generators of one presentation: sorted (gen, exp) pairs,
   exps >= 1.  The empty monomial is the unit. */
using BaseMono = std::vector<std::pair<int, int>>;

/* F2 sum of base monomials, kept sorted. */
using BaseElt = std::vector<BaseMono>;

struct TensorTerm {
    BaseMono a, b;
    bool operator<(const TensorTerm& o) const { return a != o.a ? a < o.a : b < o.b; }
    bool operator==(const TensorTerm& o) const { return a == o.a && b == o.b; }
};
using BaseTensor = std::vector<TensorTerm>; // F2 sum, sorted

/* A declared homology algebra: generators with relation disciplines, the dual
   Steenrod action on generators, and coproduct data.  Tables are finitely
   supported up to maxdim; asking beyond it is an error, below it undeclared
   entries are zero. */
class SpacePresentation {
  public:
    std::string name;
    int bottom = 1;
    int maxdim = 64;
    std::vector<SpaceGen> gens;
    std::map<std::pair<int, int>, BaseElt> sq_table;      // (r, gen) -> Sq^r_* gen, r >= 1
    std::map<int, BaseTensor> coprod_cross;               // reduced cross terms of non-primitive gens

    /// Sorts generators canonically and builds the name index.  Call once
    /// after filling in the fields.
    void finalize();

    int gen_id(const std::string& family, const std::vector<int>& index) const; // -1 if absent
    const SpaceGen& gen(int id) const { return gens.at(id); }
    std::string gen_name(int id) const;

    int height_of_gen(int id) const; // Ext -> 2, Trunc -> h, Poly -> 0 (unbounded)

    bool finalized() const { return finalized_; }

  private:
    std::map<std::pair<std::string, std::vector<int>>, int> by_name_;
    bool finalized_ = false;
};

using SpacePtr = std::shared_ptr<const SpacePresentation>;

long long base_dim(const SpacePresentation& sp, const BaseMono& m);
int base_height(const SpacePresentation& sp, const BaseMono& m); // min gen height; 0 = unbounded
std::string base_mono_name(const SpacePresentation& sp, const BaseMono& m);

BaseElt base_add(BaseElt a, const BaseElt& b); // symmetric difference
BaseElt base_mul(const SpacePresentation& sp, const BaseElt& a, const BaseElt& b);
BaseElt base_pow(const SpacePresentation& sp, const BaseElt& a, int e);

/// Monomial basis in one dimension under the relation disciplines,
/// canonically ordered.
std::vector<BaseMono> base_basis(const SpacePresentation& sp, int dim);

/// Full coproduct of a monomial (includes the m (x) 1 and 1 (x) m ends).
BaseTensor base_coprod(const SpacePresentation& sp, const BaseMono& m);

/// Dual Steenrod action pushed through products with the Cartan rule.
BaseElt base_sq_act(const SpacePresentation& sp, int r, const BaseElt& e);

/// Square root map on the base: Sq^{d/2}_* in even dimension d, zero in odd.
BaseElt base_square_root(const SpacePresentation& sp, const BaseElt& e);

/* .space file round trip.  Line grammar (see docs/formats.md):
     space <name> / bottom <d> / maxdim <N>
     gen <family>(<i,...>) dim=<d> rel=<poly|ext|trunc:h> [primitive]
     sq <r> <name> = <base-expr>
     coprod <name> = <tensor-expr>        ("(x)" separates the two sides)   */
SpacePresentation load_space(std::istream& in, const std::string& what = "<stream>");
SpacePresentation load_space_file(const std::string& path);
void save_space(std::ostream& out, const SpacePresentation& sp);

/// Parse a base-level expression ("s(1)*s(2) + s(3)") over sp.
BaseElt parse_base_expr(const SpacePresentation& sp, const std::string& text);
std::string base_elt_to_string(const SpacePresentation& sp, const BaseElt& e);
std::string base_tensor_to_string(const SpacePresentation& sp, const BaseTensor& t);

} // namespace qsk

#endif
