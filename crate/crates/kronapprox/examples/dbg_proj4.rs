use kronapprox::linalg::*;
use kronapprox::rng::SplitMix64;

fn main() {
    // exact copy of the failing loop
    let mut rng = SplitMix64::new(33);
    for trial in 0..3 {
        let y = rng.normal_matrix(4, 5);
        let z = rng.normal_matrix(4, 5);
        let py = project_nuclear_ball(&y, 1.0).unwrap();
        let pz = project_nuclear_ball(&z, 1.0).unwrap();
        let ppy = project_nuclear_ball(&py, 1.0).unwrap();
        println!(
            "trial {trial}: ||py||_F={} nuclear(py)={} dev={:.3e} pz_nuc={}",
            py.norm(),
            svd(&py).unwrap().sigma.iter().sum::<f64>(),
            (&ppy - &py).norm(),
            svd(&pz).unwrap().sigma.iter().sum::<f64>(),
        );
        println!("  sigma(y) = {:?}", svd(&y).unwrap().sigma.as_slice());
    }
}
