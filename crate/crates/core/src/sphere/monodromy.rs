//! Boundary monodromy of `Σ_{g,n}` (`n = 1, 2`) read off from the
//! hyperelliptic generators `A₁, …, A_{r−1}`, `r = 2g + n`.

use crate::error::{Error, Result};
use crate::exact::{Ring, Unimodular};

fn product<R: Ring>(ms: impl Iterator<Item = Unimodular<R>>) -> Unimodular<R> {
    ms.fold(Unimodular::identity(), |acc, m| acc * m)
}

fn check_parity(r: usize, n: u8) -> Result<()> {
    let ok = match n {
        1 => r % 2 == 1 && r >= 3,
        2 => r % 2 == 0 && r >= 4,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ParityMismatch { r, n })
    }
}

/// The boundary loops as matrices:
///
/// * `n = 1`: `(A₁A₃⋯A_{r−2}) (A₁A₂⋯A_{r−1})⁻¹ (A₂A₄⋯A_{r−1})`;
/// * `n = 2`: `A₁A₃⋯A_{r−1}` and `(A₁A₂⋯A_{r−1})⁻¹ (A₂A₄⋯A_{r−2})`.
pub fn boundary_matrices<R: Ring>(a: &[Unimodular<R>], n: u8) -> Result<Vec<Unimodular<R>>> {
    let r = a.len() + 1;
    check_parity(r, n)?;
    let odd = || product(a.iter().step_by(2).cloned());
    let even = || product(a.iter().skip(1).step_by(2).cloned());
    let all_inv = product(a.iter().cloned()).inverse();
    Ok(match n {
        1 => vec![odd() * all_inv * even()],
        _ => vec![odd(), all_inv * even()],
    })
}

/// Traces of [`boundary_matrices`].
pub fn boundary_monodromy<R: Ring>(a: &[Unimodular<R>], n: u8) -> Result<Vec<R>> {
    Ok(boundary_matrices(a, n)?.iter().map(Unimodular::trace).collect())
}
