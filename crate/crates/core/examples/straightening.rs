//! Straightening integer vectors to signed partitions, and raising
//! operators acting on indices.

use schurkit::schur_core::{apply_raising, straighten};
use schurkit::IntVector;

fn main() -> schurkit::Result<()> {
    for v in [
        vec![1, 2],
        vec![0, 2],
        vec![1, 3],
        vec![2, 0, 3],
        vec![1, 1, 3],
        vec![3, -1],
        vec![0, 0, 4],
    ] {
        let alpha = IntVector::new(v);
        println!("{alpha:>12}  ->  {}", straighten(&alpha).to_symfunc());
    }

    let alpha = IntVector::new(vec![2, 1, 1]);
    let raised = apply_raising(&alpha, 1, 3)?;
    println!(
        "R13 {alpha} = {raised}, straightened {}",
        straighten(&raised).to_symfunc()
    );
    Ok(())
}
