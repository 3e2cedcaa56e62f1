//! Twisting a representation by central signs, and which sign vectors fix
//! the boundary data.

use skeinlab::sample;
use skeinlab::sphere::central::{boundary_preserved_on, central_to_sphere};
use skeinlab::sphere::{boundary_monodromy, boundary_preserved_by_signs};

fn main() -> skeinlab::Result<()> {
    let mut g = sample::rng(13);
    for (r, n) in [(4usize, 2u8), (5, 1)] {
        let a: Vec<_> = (0..r - 1).map(|_| sample::unimodular_gauss(&mut g)).collect();
        println!("r = {r}, n = {n}: boundary data {:?}", boundary_monodromy(&a, n)?);
        for bits in 0..1u32 << (r - 1) {
            let eps: Vec<i8> = (0..r - 1).map(|i| if bits >> i & 1 == 1 { -1 } else { 1 }).collect();
            let predicted = boundary_preserved_by_signs(&eps, n)?;
            let observed = boundary_preserved_on(&eps, &a, n)?;
            assert_eq!(predicted, observed);
            if predicted {
                println!("  {eps:?} preserves; sphere signs {:?}", central_to_sphere(&eps));
            }
        }
    }
    Ok(())
}
