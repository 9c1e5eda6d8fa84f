//! Stated closed forms for `vs_χ′` on named families.
//!
//! These are expectations to test the generic engine against, reproduced as
//! stated; a few of them do not hold at small or odd parameters (see the
//! `verify` claim catalogue).

use crate::graph::FamilySpec;

/// Predicted `vs_χ′` for a family member, `None` where no closed form is
/// stated (complete multipartite graphs, `P_1`, `P_2`, `K_1`, apex graphs
/// over `K_1`).
pub fn closed_form_vs_chi_prime(spec: &FamilySpec) -> Option<usize> {
    let value = match *spec {
        FamilySpec::Path(n) if n >= 3 => (n - 2).div_ceil(3),
        FamilySpec::Cycle(n) if n % 2 == 1 => 1,
        FamilySpec::Cycle(n) => n.div_ceil(3),
        FamilySpec::Complete(n) if n >= 2 => {
            if n % 2 == 1 {
                1
            } else {
                2
            }
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a == b {
                2
            } else {
                1
            }
        }
        FamilySpec::Wheel(3) => 2,
        FamilySpec::Wheel(_) => 1,
        FamilySpec::GadgetChain(k) => k,
        FamilySpec::CompletePlusApex { n, d } if n >= 2 => {
            if n % 2 == 1 || d == 0 {
                2
            } else {
                1
            }
        }
        _ => return None,
    };
    Some(value)
}
