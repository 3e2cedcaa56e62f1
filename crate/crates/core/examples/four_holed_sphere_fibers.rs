//! The cubic relation among `x, y, z` on a fiber of fixed boundary traces
//! of the four-holed sphere.

use skeinlab::exact::Rat;
use skeinlab::sample;
use skeinlab::skein::{fiber_coefficients, fiber_law, Triple};

fn main() {
    let law = fiber_law();
    println!("xyz sign {}", law.xyz_sign);
    println!("A = {}\nB = {}\nC = {}\nD = {}", law.a, law.b, law.c, law.d);

    let p = [Rat::new(1, 2), Rat::int(0), Rat::int(-1), Rat::int(3)];
    println!("\nat p = (1/2, 0, -1, 3): {}", fiber_coefficients(&p));

    let mut g = sample::rng(11);
    let seed = Triple::random_integral(&mut g, 3);
    let eq = fiber_coefficients(&seed.boundary());
    println!("\nrandom fiber: {eq}");
    for _ in 0..5 {
        let t = seed.wander(&mut g, 1);
        let c = t.coords();
        println!("  (x, y, z) = ({}, {}, {}) residual {}", c[0], c[1], c[2], eq.eval(&c[0], &c[1], &c[2]));
    }
}
