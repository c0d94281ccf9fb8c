#pragma once

// Cohomology of the B-modules E_delta(nu), boundary images, and the
// filtrations of H^j(mu) built from the D-filtration.

#include "sl3coh/cohom.hpp"
#include "sl3coh/dfilt.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sl3coh {

// How the cohomology of E_delta(nu) was determined.
enum class ERule { LineBundle, EdgeVanish, Coprime, DegreeSplit, H2Vanish, ValuationSplit, Recursion };
std::string to_string(ERule r);

struct ECohomology {
    std::array<Character, 4> h;
    // images of H^k(nu) -> H^{k+1}(nu - delta), k = 0, 1, 2
    std::array<Character, 3> images;
    ERule rule = ERule::LineBundle;
};

ECohomology e_cohomology(const EDescriptor& e, Int p);
Character e_coh_char(int i, const EDescriptor& e, Int p);

// Parameter families on which H^2(E_delta(nu)) is known to vanish, on which
// the boundary map H^1 -> H^2 vanishes, and the window of the three-step
// recursion for H^2(E_delta(nu)). Each checks both orientations.
bool e_h2_vanishing_family(Delta d, const Weight& nu, Int p);
bool boundary_vanishing_family(Delta d, const Weight& nu, Int p);
bool e_recursion_window(Delta d, const Weight& nu, Int p);
// H^2(E_d(nu)) by the three-step recursion alone, when nu is in its window.
std::optional<Character> e_h2_by_recursion(Delta d, const Weight& nu, Int p);

struct BoundaryImage {
    Delta delta;
    Weight mu;
    Character character;
};

// Image of H^1(mu) -> H^2(mu - delta), for mu = (m, -n-2) with m > n >= 0.
BoundaryImage i_delta_char(Delta delta, const Weight& mu, Int p);

enum class Annotation { Plain, Effaced, PartialQuotient };
std::string to_string(Annotation a);

struct HLayer {
    Weight nu0;
    EDescriptor e;
    int j = 0;
    Character resolved;
    Annotation annotation = Annotation::Plain;
    Character suppressed; // what an Effaced layer would have carried
    Character image;      // the cut part for PartialQuotient
};

std::vector<HLayer> p_hi_d_filtration(int j, const Weight& mu, Int p);
std::vector<HLayer> jantzen_p_filtration(const Weight& lambda, Int p);

struct WallLayer {
    int level;          // i, 1 <= i <= degree of n
    Weight outer;       // (0, n - r_i)
    Weight quotient;    // (r_{i-1}, r_i - 2 r_{i-1} - 2)
    Character quotient_char;
    Character character;
};

struct WallItem {
    Weight nu;
    int twist;
    Weight lambda;
    Character character;
};

struct WallFiltration {
    std::vector<WallLayer> layers;             // digit-by-digit filtration
    std::vector<std::vector<WallItem>> levels; // level i holds q_i items
};

WallFiltration wall_h2_filtration(Int n, Int p);

struct ReportLayer {
    int index;       // position k of nu_k in the composition series of Zhat(mu)
    Weight nu;       // nu0 + p nu1
    Weight nu0;
    Weight nu1;
    Delta delta;     // delta of the D-layer this factor belongs to
    Annotation status;
    Character full;  // L(nu0) (x) H^i(nu1)^(1)
    Character character;
    Character image;
};

struct LayerReport {
    int degree;
    Weight mu;
    std::string case_tag;
    Int R;
    Int S;
    std::vector<ReportLayer> layers;
};

LayerReport hi_layer_report(int i, const Weight& mu, Int p);

} // namespace sl3coh
