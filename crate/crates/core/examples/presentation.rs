//! Defining binomials, determinantal minors and Betti elements of a KW member.
//!
//! `cargo run --example presentation`

use kwsgp::presentation::{
    appendix_generators, betti_elements, check_kw_presentation, compare_minors,
    determinantal_minors,
};
use kwsgp::{KwCorners, KwParams};

fn main() -> kwsgp::Result<()> {
    for corners in [
        vec![(2, 2), (3, 1)],
        vec![(1, 3), (2, 2), (3, 1)],
        vec![(1, 4)],
    ] {
        let (p, q) = if corners.len() == 1 { (8, 9) } else { (7, 9) };
        let c = KwCorners::new(KwParams::new(p, q)?, corners)?;
        let gens = c.generators();
        println!("KW({p},{q}) corners {:?} -> <{gens:?}>", c.corners());
        for b in appendix_generators(&c)? {
            println!(
                "  {:<7} {:<28} degree {}",
                b.label,
                b.binomial.to_string(),
                b.binomial.degree
            );
        }
        println!("  {} distinct minors", determinantal_minors(&c)?.len());
        let cmp = compare_minors(&c)?;
        println!(
            "  literal match {}, same ideal {}",
            cmp.literal_equal, cmp.same_ideal
        );
        for b in &cmp.extra {
            println!("  extra minor {b}");
        }
        let h = kwsgp::kw2d::build_kw(&c)?;
        let betti = betti_elements(&h);
        println!("  Betti degrees {:?}, mu {}", betti.degrees(), betti.mu);
        let report = check_kw_presentation(&c)?;
        println!(
            "  mu {} (expected {}), type {} (expected {}), passes {}\n",
            report.mu,
            report.expected_mu,
            report.semigroup_type,
            report.expected_type,
            report.passes
        );
    }
    Ok(())
}
