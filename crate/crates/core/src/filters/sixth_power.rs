//! Replay of the centralizer argument for types `(1,p^2;p,x;p^2,y)` in
//! dimension `p^6`.
//!
//! 1. The adjoint subcategory has dimension `p^4` and must contain all `p^2`
//!    invertibles, so `C_pt` is a Tannakian subcategory of `C_ad`.
//! 2. The other `p^2 - 1` grading components have dimension `p^4` and no
//!    invertibles: each is a single `p^2`-dimensional simple or `p^2` simples
//!    of dimension `p`.
//! 3. For `D = Rep(Z_p)` inside `C_pt`, the centralizer `D'` has dimension
//!    `p^5` and is the sum of the components over an order-`p` subgroup of
//!    the grading group. Choosing that subgroup through a dual pair of
//!    `p^2`-dimensional components puts a `p^2`-dimensional simple in `D'`.
//! 4. `D'` de-equivariantized by `Z_p` is modular of dimension `p^4`, hence
//!    pointed, so every simple of `D'` has dimension at most `p`.
//!
//! Step 3 is forced by counting only when fewer than `p - 1` components are
//! of the `p`-dimensional kind; otherwise it relies on picking the subgroup,
//! which a cyclic grading group need not allow. The verdict reason says which.

use num_integer::Integer;

use super::adjoint::candidates;
use super::{Finding, Subject};
use crate::typevec::TypeVector;

pub(super) struct SixthPower {
    p: u64,
    x: u64,
    y: u64,
}

pub(super) fn hypothesis(s: &Subject<'_>) -> Option<SixthPower> {
    let &[(p, 6)] = s.fac.factors() else {
        return None;
    };
    if p == 2 {
        return None;
    }
    let p2 = p * p;
    match s.t.entries() {
        [one, mid, top] if one.count == p2 && mid.dim == p && top.dim == p2 => {
            (mid.count.gcd(&p) == 1).then_some(SixthPower {
                p,
                x: mid.count,
                y: top.count,
            })
        }
        _ => None,
    }
}

pub(super) fn check(s: &Subject<'_>, h: SixthPower) -> Finding {
    let SixthPower { p, x, y } = h;
    let p2 = p * p;
    let p4 = p2 * p2;

    // step 1
    let adjoints = candidates(s.t, s.n);
    if adjoints.is_empty() {
        return Finding::Reject(format!("no adjoint type of dimension {p4} exists"));
    }
    if let Some(c) = adjoints
        .iter()
        .find(|c| c.invertibles() != p2 || c.count_of(p2).is_some())
    {
        return Finding::Inconclusive(format!(
            "adjoint candidate {c} does not force C_pt into C_ad; the chain does not close"
        ));
    }
    let x_ad = adjoints[0].count_of(p).unwrap_or(0);

    // step 2
    let others = p2 - 1;
    if y > others || x < x_ad || x - x_ad != p2 * (others - y) {
        return Finding::Reject(format!(
            "the {others} non-trivial grading components of dimension {p4} cannot hold \
             {} simples of dimension {p} and {y} of dimension {p2}",
            x.saturating_sub(x_ad)
        ));
    }
    if y % 2 == 1 {
        return Finding::Reject(format!(
            "{y} components with a single {p2}-dimensional simple cannot pair into duals"
        ));
    }
    let small = others - y;

    // step 3: D' = C_ad plus p-1 components, at least one dual pair of them
    // of the single-simple kind.
    let forced = small < p - 1;
    let centralizers: Vec<TypeVector> = (0..=small.min(p - 3))
        .filter(|&k| p - 1 - k <= y)
        .filter_map(|k| {
            TypeVector::from_pairs(&[(1, p2), (p, x_ad + p2 * k), (p2, p - 1 - k)]).ok()
        })
        .collect();

    // step 4
    if let Some(c) = centralizers.iter().find(|c| c.max_dim() <= p) {
        return Finding::Inconclusive(format!(
            "centralizer candidate {c} has no simple above dimension {p}; the chain does not close"
        ));
    }
    let shown = centralizers
        .iter()
        .map(TypeVector::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let alignment = if forced {
        format!("every order-{p} subgroup meets such a pair by counting")
    } else {
        format!(
            "assumes an order-{p} subgroup of the grading group through such a pair; \
             counting alone does not force it for a cyclic grading group"
        )
    };
    Finding::Reject(format!(
        "C_ad is forced to {}; the {others} other components split into {y} single \
         {p2}-dimensional simples and {small} blocks of {p2} simples of dimension {p}; \
         the centralizer of Z_{p} through a dual pair of {p2}-dimensional components has type \
         {shown} and dimension {}; de-equivariantizing by Z_{p} gives a pointed modular \
         category of dimension {p4}, so its simples have dimension at most {p}, a contradiction \
         ({alignment})",
        adjoints[0],
        p4 * p
    ))
}
