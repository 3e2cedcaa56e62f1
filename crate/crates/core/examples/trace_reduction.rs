//! Trace polynomials of words on the once-punctured torus, checked against
//! an explicit representation.

use skeinlab::exact::{Rat, Unimodular};
use skeinlab::skein::{trace_reduce, MatrixRep, TORUS_VARS};
use skeinlab::words::{SurfaceSig, Word};

fn main() -> skeinlab::Result<()> {
    let sig = SurfaceSig::ONCE_PUNCTURED_TORUS;
    let rep: MatrixRep<Rat> = MatrixRep::new(
        sig,
        vec![Unimodular::from_ints(2, 1, 1, 1)?, Unimodular::from_ints(1, 1, 1, 2)?],
    )?;
    let [x, y, z] = rep.torus_coords()?;
    println!("coordinates at the rep: x = {x}, y = {y}, z = {z}");

    for w in ["ab", "aB", "aab", "abAB", "aabAbB", "abbaB"] {
        let word: Word = w.parse()?;
        let f = trace_reduce(&sig, &word)?;
        let at = f.eval(&[x.clone(), y.clone(), z.clone()]);
        println!("tr {w:8} = {f}   ({at} vs {})", rep.evaluate_trace(&word)?);
        assert_eq!(at, rep.evaluate_trace(&word)?);
    }
    println!("variables: {TORUS_VARS:?}");
    Ok(())
}
