use kronapprox::linalg::*;
use kronapprox::rng::SplitMix64;

fn main() {
    let mut rng = SplitMix64::new(33);
    let y = rng.normal_matrix(4, 5);
    let f = svd(&y).unwrap();
    println!("u0 norm = {}", f.u.column(0).norm());
    println!("v0 norm = {}", f.v.column(0).norm());
    println!("u shape {:?} v shape {:?}", f.u.shape(), f.v.shape());
    let dyad = f.u.column(0) * f.v.column(0).transpose();
    println!("||u0 v0t||_F = {}", dyad.norm());
    let py = project_nuclear_ball(&y, 1.0).unwrap();
    println!("||py||_F = {}  (should be 1 for rank-1)", py.norm());
    println!("||py - dyad|| = {}", (&py - &dyad).norm());
    // orthogonality of u
    println!("UtU = {:.3}", f.u.transpose() * &f.u);
    println!("VtV = {:.3}", f.v.transpose() * &f.v);
}
