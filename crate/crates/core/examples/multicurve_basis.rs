//! Expanding polynomials in the basis of multicurves `T_s^k κ^m`.

use skeinlab::exact::MultiPoly;
use skeinlab::skein::{multicurve_decompose, slope_trace, TORUS_VARS};
use skeinlab::words::Slope;

fn main() -> skeinlab::Result<()> {
    for s in ["1/0", "0/1", "1/1", "2/1", "-1/2", "3/2"] {
        let s: Slope = s.parse()?;
        println!("T[{s}] = {}", slope_trace(&s));
    }
    for src in ["x*y", "x*y*z", "x^2 + y^2 + z^2 - x*y*z - 2", "x^3*y - 2*z^2 + 5"] {
        let f = MultiPoly::parse(src, &TORUS_VARS)?;
        let d = multicurve_decompose(&f)?;
        assert_eq!(d.recombine(), f);
        println!("{src}\n    = {d}");
    }
    Ok(())
}
