use kronapprox::linalg::*;
use kronapprox::rng::SplitMix64;

fn main() {
    let mut rng = SplitMix64::new(33);
    let y = rng.normal_matrix(4, 5);
    let f = svd(&y).unwrap();
    println!("sigma(y) from crate svd: {:?}", f.sigma.as_slice());
    let raw = y.clone().svd(true, true);
    println!("sigma(y) raw nalgebra:   {:?}", raw.singular_values.as_slice());

    let s = &f.sigma;
    let radius = 1.0;
    let mut cum = 0.0;
    for i in 0..s.len() {
        cum += s[i];
        let t = (cum - radius) / (i + 1) as f64;
        println!("i={i} s={} t={} cond={}", s[i], t, s[i] > t);
    }
}
