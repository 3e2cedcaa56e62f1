//! Valuations `v_λ` attached to weighted slopes, and their agreement with
//! intersection numbers on simple curves.

use skeinlab::exact::MultiPoly;
use skeinlab::lamination::{farey_ball, valuate, Lamination};
use skeinlab::skein::{slope_trace, TORUS_VARS};
use skeinlab::words::Slope;

fn main() -> skeinlab::Result<()> {
    let lam: Lamination = "1/2:3".parse()?;
    for s in Slope::up_to_height(2) {
        let v = valuate(&lam, &slope_trace(&s))?;
        println!("v(T[{s}]) = {v}   i(λ, s) = {}", lam.intersection(&s));
    }
    for src in ["x*y*z", "x^2 + y^2 + z^2 - x*y*z", "y^3 - x", "0"] {
        let f = MultiPoly::parse(src, &TORUS_VARS)?;
        println!("v({src}) = {}", valuate(&lam, &f)?);
    }
    println!("\nFarey ball of radius 1 around 1/2:");
    for (s, d) in farey_ball(&"1/2".parse()?, 1, 3) {
        println!("  {s} at distance {d}");
    }
    Ok(())
}
