//! Braids acting on configurations of points of the unit quaternion sphere
//! by reflections.

use skeinlab::sample;
use skeinlab::sphere::{moduli_equal, rep_to_sphere, sphere_to_rep, SphereConfig};

fn main() -> skeinlab::Result<()> {
    let mut g = sample::rng(5);
    let c = SphereConfig::new((0..5).map(|_| sample::unimodular_gauss(&mut g)).collect())?;
    println!("r = {}, gram row 0: {:?}", c.r(), c.gram()[0]);

    let lhs = c.braid_word(&[1, 2, 1])?;
    let rhs = c.braid_word(&[2, 1, 2])?;
    println!("σ1σ2σ1 = σ2σ1σ2: {}", lhs == rhs);
    println!("σ1σ3 = σ3σ1: {}", c.braid_word(&[1, 3])? == c.braid_word(&[3, 1])?);
    println!("σ2σ2⁻¹ = 1: {}", c.braid_word(&[2, -2])? == c);

    let t = c.right_translate(&sample::unimodular_gauss(&mut g));
    println!("translated config, same moduli: {:?}", moduli_equal(&c, &t)?);

    let a: Vec<_> = (0..4).map(|_| sample::unimodular_gauss(&mut g)).collect();
    println!("rep -> sphere -> rep is the identity: {}", sphere_to_rep(&rep_to_sphere(&a)) == a);
    Ok(())
}
