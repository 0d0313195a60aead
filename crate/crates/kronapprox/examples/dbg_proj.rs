use kronapprox::linalg::*;
use kronapprox::rng::SplitMix64;

fn main() {
    let mut rng = SplitMix64::new(33);
    for trial in 0..10 {
        let y = rng.normal_matrix(4, 5);
        let _z = rng.normal_matrix(4, 5);
        let py = project_nuclear_ball(&y, 1.0).unwrap();
        let ppy = project_nuclear_ball(&py, 1.0).unwrap();
        let f = svd(&py).unwrap();
        println!(
            "trial {trial}: sv(py) = {:?} dev = {:.3e}",
            f.sigma.as_slice(),
            (&ppy - &py).norm()
        );
    }
}
