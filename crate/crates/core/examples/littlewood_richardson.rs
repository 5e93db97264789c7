//! Littlewood-Richardson coefficients three ways: counting LR tableaux,
//! cancelling a signed sum, and reading off a product.

use schurkit::ring::multiply;
use schurkit::tableaux::{bz_involution, lr_coefficient, lr_tableaux, signed_lr_sum, signed_pairs};
use schurkit::{partition, Basis, SymFunc};

fn main() -> schurkit::Result<()> {
    let (lambda, mu, nu) = (partition![3, 2, 1], partition![2, 1], partition![2, 1]);
    println!("c = {}", lr_coefficient(&lambda, &mu, &nu));
    for t in lr_tableaux(&lambda, &mu, &nu) {
        println!("{t}\n");
    }

    let pairs = signed_pairs(&lambda, &mu, &nu);
    let bad = pairs.iter().filter(|p| p.is_bad()).count();
    println!(
        "{} signed pairs, {bad} bad, signed sum {}",
        pairs.len(),
        signed_lr_sum(&lambda, &mu, &nu)
    );
    if let Some(p) = pairs.iter().find(|p| p.is_bad()) {
        let image = bz_involution(p, &nu)?;
        println!(
            "w = {} (sign {}) pairs with w = {} (sign {})",
            p.w,
            p.sign(),
            image.w,
            image.sign()
        );
    }

    let s = |p| SymFunc::basis_element(Basis::Schur, p);
    println!("s[2,1] * s[2,1] = {}", multiply(&s(mu), &s(nu)));
    Ok(())
}
