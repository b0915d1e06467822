//! Closed-form principal matrices against brute force, family by family.
//!
//! `cargo run --example principal_matrices -- 8 9`

use std::collections::BTreeMap;

use kwsgp::kw2d::enumerate_kw;
use kwsgp::principal::{check_theorem31, principal_matrix_bruteforce};
use kwsgp::{KwParams, NumericalSemigroup};

fn main() -> kwsgp::Result<()> {
    let h = NumericalSemigroup::generated_by(&[5, 7, 11, 13])?;
    println!("brute-force principal matrix of <5,7,11,13>:");
    for row in principal_matrix_bruteforce(&h)?.entries {
        println!("  {row:?}");
    }

    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (8, 9),
    };
    let mut by_case: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for m in enumerate_kw(KwParams::new(p, q)?) {
        let Some(c) = m.corners() else { continue };
        let r = check_theorem31(c)?;
        let label = r.case.map_or("n = 2", |k| k.label());
        let e = by_case.entry(label).or_default();
        e.0 += 1;
        e.1 += usize::from(r.agrees);
        if r.case.is_some_and(|k| k.is_exception()) && e.0 == 1 {
            println!("first {label} member {:?}:", c.corners());
            for (a, b) in r.closed_form.iter().zip(&r.brute_force) {
                println!("  closed {a:?}  brute {b:?}");
            }
        }
    }
    println!("KW({p},{q}) by case (members, agreeing):");
    for (label, (n, ok)) in by_case {
        println!("  {label:<18} {n:>4} {ok:>4}");
    }
    Ok(())
}
