//! The moduli `S(4, r)` of `r` points on the complex 3-sphere modulo
//! `SO(4)`, the braid action on it, and its dictionary with hyperelliptic
//! generators of surface groups.

pub mod central;
pub mod clifford;
pub mod config;
pub mod monodromy;
pub mod point;

pub use central::{boundary_preserved_by_signs, central_to_sphere};
pub use clifford::{char_poly, coxeter_product, gammas, CharPoly, Mat4};
pub use config::{braid_on_rep, moduli_equal, rep_to_sphere, sphere_to_rep, ModuliCmp, SphereConfig};
pub use monodromy::boundary_monodromy;
pub use point::{pairing, reflect, vec_to_mat, SpherePoint};
