//! The characteristic polynomial of the Coxeter element, a braid invariant
//! of sphere configurations.

use skeinlab::sample;
use skeinlab::sphere::clifford::check_anticommutation;
use skeinlab::sphere::{char_poly, coxeter_product, SphereConfig};

fn main() -> skeinlab::Result<()> {
    println!("gamma matrices anticommute: {}", check_anticommutation());
    let mut g = sample::rng(8);
    let c = SphereConfig::new((0..4).map(|_| sample::unimodular_gauss(&mut g)).collect())?;
    let base = char_poly(&coxeter_product(&c));
    println!("char poly: {base}");
    for word in [vec![1], vec![2, -3], vec![3, 1, 2, 2]] {
        let moved = c.braid_word(&word)?;
        let cp = char_poly(&coxeter_product(&moved));
        println!("after {word:?}: unchanged = {}", cp == base);
    }
    Ok(())
}
