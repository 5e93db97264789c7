//! Transition matrices between the s, h, e and m bases.

use schurkit::ring::{convert, TransitionMatrix};
use schurkit::{Basis, SymFunc};

fn show(m: &TransitionMatrix) {
    println!("{} -> {} in degree {}", m.source, m.target, m.degree);
    for (row, lambda) in m.entries.iter().zip(&m.partitions) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        println!("  {lambda:<10}{}", cells.join(""));
    }
}

fn main() -> schurkit::Result<()> {
    let kostka = TransitionMatrix::new(4, Basis::Schur, Basis::Monomial);
    show(&kostka);
    println!("unitriangular for dominance: {}", kostka.is_lower_unitriangular());
    show(&TransitionMatrix::new(4, Basis::Monomial, Basis::Schur));

    let f: SymFunc = "2*h[2,1] - h[3]".parse()?;
    for b in Basis::ALL {
        println!("{}", convert(&f, b));
    }
    Ok(())
}
