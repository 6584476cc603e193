#ifndef BIRCONES_POINTED_CONICS_HPP
#define BIRCONES_POINTED_CONICS_HPP

#include "bircones/cone.hpp"
#include "bircones/report.hpp"

namespace bircones {

/// Divisor class on the pointed-conic space M_{0,1}(LG(n,2n),2), written in
/// the basis (H_1, H_sigma2, Delta_{1|1}). The named classes below are
/// n-independent in this basis; only the anticanonical class depends on n.
struct ConicDivClass {
  RationalVector coords;  // length 3
};

/// Class on Bl_{p,q} Q^3 in the basis (H, E_p, E_q).
struct BlowupClass {
  RationalVector coords;  // length 3
};

ConicDivClass conic_h1();          // (1, 0, 0)
ConicDivClass conic_hsigma2();     // (0, 1, 0)
ConicDivClass conic_delta();       // (0, 0, 1)
ConicDivClass tangency_class();    // T = H_sigma2 + Delta/2 = (0, 1, 1/2)
ConicDivClass unbalanced_class();  // D_unb = H_sigma2 - Delta/2 = (0, 1, -1/2)
ConicDivClass psi1_class();        // psi_1 = -H_1 + T/2 = (-1, 1/2, 1/4)

/// Eff = <H_1, Delta, D_unb>; Nef = <H_1, H_sigma2, T>. Both simplicial and
/// independent of n (validated for n >= 2).
Cone eff_cone_conics(int n);
Cone nef_cone_conics(int n);

/// -K: (1, 5/2, 3/4) for n = 2 and (1, (n+2)/2, (6-n)/4) for n >= 3.
ConicDivClass anticanonical_conics(int n);

/// Same class expressed through the tangency divisor: H_1 + H_sigma2 + 3/2 T
/// for n = 2 and H_1 + (n-2) H_sigma2 + (6-n)/2 T for n >= 3.
ConicDivClass anticanonical_conics_t_form(int n);

/// Pullback to the two-point blow-up of the quadric threefold:
/// H_1 -> H, H_sigma2 -> H - E_p - E_q, Delta -> 2(H - E_p - E_q), D_unb -> 0.
BlowupClass restrict_to_blowup(const ConicDivClass& c);

ClassificationReport classify_conics(int n);

}  // namespace bircones

#endif
