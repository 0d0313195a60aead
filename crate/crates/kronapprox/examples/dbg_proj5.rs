use kronapprox::linalg::*;
use kronapprox::rng::SplitMix64;

fn main() {
    let mut rng = SplitMix64::new(33);
    let y = rng.normal_matrix(4, 5);
    let f = svd(&y).unwrap();
    let dyad = f.u.column(0) * f.v.column(0).transpose(); // exact rank-1, ||.||_F = 1
    println!("dyad frob = {}", dyad.norm());

    // raw nalgebra on the wide rank-1 matrix
    let raw = dyad.clone().svd(true, true);
    println!("raw sv of dyad (4x5): {:?}", raw.singular_values.as_slice());
    let rec = raw.u.as_ref().unwrap()
        * nalgebra::DMatrix::from_diagonal(&raw.singular_values)
        * raw.v_t.as_ref().unwrap();
    println!("raw recon err: {:.3e}", (&rec - &dyad).norm());

    // transpose (tall)
    let rawt = dyad.transpose().svd(true, true);
    println!("raw sv of dyadT (5x4): {:?}", rawt.singular_values.as_slice());

    // values-only path
    let vals = dyad.clone().singular_values();
    println!("values-only sv: {:?}", vals.as_slice());
}
