//! Invariants of a numerical semigroup given by generators.
//!
//! `cargo run --example semigroup_basics -- 5 7 11 13`

use kwsgp::NumericalSemigroup;

fn main() -> kwsgp::Result<()> {
    let gens: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer generator"))
        .collect();
    let gens = if gens.is_empty() {
        vec![5, 7, 11, 13]
    } else {
        gens
    };
    let h = NumericalSemigroup::generated_by(&gens)?;

    println!("H = <{:?}>", h.generators());
    println!(
        "multiplicity {}, embedding dimension {}",
        h.multiplicity(),
        h.embedding_dimension()
    );
    println!("Frobenius number {}, genus {}", h.frobenius(), h.genus());
    println!("gaps {:?}", h.gaps());
    let pf = h.pseudo_frobenius();
    println!(
        "pseudo-Frobenius {:?} (type {})",
        pf.elements,
        pf.semigroup_type()
    );
    println!("symmetric: {}", h.is_symmetric());
    for &m in h.generators() {
        println!("Ap(H, {m}) = {:?}", h.apery(m)?.elements);
    }
    let t = h.frobenius() + h.multiplicity() + 1;
    let facts: Vec<_> = h.factorizations(t).into_iter().map(|f| f.0).collect();
    println!("factorizations of {t}: {facts:?}");
    Ok(())
}
