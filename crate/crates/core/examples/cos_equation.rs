//! Integral solutions of sums of cos²(π/x).

use fusionring::numerics::{solve_cos_equation, CosTarget};

fn main() {
    let target = CosTarget::GOLDEN;
    for terms in [2, 3] {
        let sols = solve_cos_equation(terms, target, 100).unwrap();
        println!("{terms} terms = {target}: {sols:?}");
    }
    let half = CosTarget::Rational { num: 1, den: 2 };
    println!("2 terms = 1/2: {:?}", solve_cos_equation(2, half, 50).unwrap());
}
