//! Relative automorphisms of the torus character variety: the generators,
//! a Vieta involution and coordinate sign changes.

use skeinlab::actions::{
    coordinate_signs, is_relative_automorphism, vieta, word_map, CoordSystem, TorusGen,
};
use skeinlab::words::Slope;

fn main() -> skeinlab::Result<()> {
    for g in [TorusGen::R, TorusGen::T, TorusGen::U, TorusGen::TInv] {
        let m = g.coord_map();
        println!("{g}: {m}  relative: {}", is_relative_automorphism(&m).holds());
    }
    let tz = vieta(CoordSystem::Torus, 'z')?;
    println!("τ_z: {tz}  relative: {}", is_relative_automorphism(&tz).holds());

    for eps in [[1, 1, 1], [-1, -1, 1], [-1, 1, 1], [-1, -1, -1]] {
        let m = coordinate_signs(eps);
        println!("signs {eps:?}: relative = {}", is_relative_automorphism(&m).holds());
    }

    let m = word_map(&[TorusGen::T, TorusGen::T, TorusGen::R]);
    for s in ["1/0", "0/1", "1/1"] {
        let s: Slope = s.parse()?;
        println!("T T R sends slope {s} to {:?}", m.slope_image(&s).map(|t| t.to_string()));
    }
    Ok(())
}
