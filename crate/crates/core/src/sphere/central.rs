//! Central representations `π → {±1}` on the sphere side.

use super::monodromy::boundary_monodromy;
use crate::error::{Error, Result};
use crate::exact::{Ring, Unimodular};

/// `(a₁⋯a_{r−1}, a₂⋯a_{r−1}, …, a_{r−1}, 1)`.
pub fn central_to_sphere(a: &[i8]) -> Vec<i8> {
    let mut out = vec![1i8];
    for &s in a.iter().rev() {
        out.push(s * out.last().expect("nonempty"));
    }
    out.reverse();
    out
}

/// `(a_j A_j)`.
pub fn signed_tuple<R: Ring>(a: &[i8], m: &[Unimodular<R>]) -> Result<Vec<Unimodular<R>>> {
    if a.len() != m.len() {
        return Err(Error::SizeMismatch(a.len(), m.len()));
    }
    Ok(a.iter()
        .zip(m)
        .map(|(&s, x)| if s < 0 { x.neg() } else { x.clone() })
        .collect())
}

/// `(a₁a₃⋯, a₂a₄⋯)`, the alternating products of the sign vector.
pub fn alternating_products(a: &[i8]) -> (i8, i8) {
    let odd = a.iter().step_by(2).product();
    let even = a.iter().skip(1).step_by(2).product();
    (odd, even)
}

/// Whether twisting by `a` fixes every boundary trace. For `n = 1` always;
/// for `n = 2` the first loop `A₁A₃⋯A_{r−1}` scales by `a₁a₃⋯a_{r−1}` and
/// the second by `(∏a)(a₂a₄⋯) = a₁a₃⋯a_{r−1}` as well, so the condition is
/// the odd product alone.
pub fn boundary_preserved_by_signs(a: &[i8], n: u8) -> Result<bool> {
    let r = a.len() + 1;
    match n {
        1 if r % 2 == 1 && r >= 3 => Ok(true),
        2 if r % 2 == 0 && r >= 4 => Ok(alternating_products(a).0 == 1),
        _ => Err(Error::ParityMismatch { r, n }),
    }
}

/// The same question answered by comparing boundary traces of `A` and of
/// the twisted tuple.
pub fn boundary_preserved_on<R: Ring>(a: &[i8], m: &[Unimodular<R>], n: u8) -> Result<bool> {
    Ok(boundary_monodromy(&signed_tuple(a, m)?, n)? == boundary_monodromy(m, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_products() {
        assert_eq!(central_to_sphere(&[1, 1, 1]), vec![1, 1, 1, 1]);
        assert_eq!(central_to_sphere(&[-1, 1]), vec![-1, 1, 1]);
        assert_eq!(central_to_sphere(&[1, -1, -1]), vec![1, 1, -1, 1]);
    }

    #[test]
    fn criterion_examples() {
        assert!(boundary_preserved_by_signs(&[-1, 1], 1).unwrap());
        assert!(boundary_preserved_by_signs(&[-1, 1, -1], 2).unwrap());
        assert!(!boundary_preserved_by_signs(&[-1, 1, 1], 2).unwrap());
        assert!(boundary_preserved_by_signs(&[1, -1, 1], 2).unwrap());
        assert!(boundary_preserved_by_signs(&[1, 1], 2).is_err());
    }
}
