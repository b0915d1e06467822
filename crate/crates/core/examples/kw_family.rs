//! All members of KW(p, q) with their lattice paths.
//!
//! `cargo run --example kw_family -- 7 9`

use kwsgp::kw2d::{enumerate_kw, is_kw, render_path, KwMember};
use kwsgp::KwParams;

fn main() -> kwsgp::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (p, q) = match args[..] {
        [p, q] => (p, q),
        _ => (5, 7),
    };
    let params = KwParams::new(p, q)?;
    let members = enumerate_kw(params);
    println!("KW({p},{q}): {} members, r = {}", members.len(), params.r());
    for m in &members {
        match m {
            KwMember::Corners(c) => {
                let path = render_path(c);
                let h = m.semigroup()?;
                assert_eq!(is_kw(&h, params).as_ref(), Some(c));
                println!(
                    "{:<24} {:<10} <{:?}>",
                    format!("{:?}", c.corners()),
                    path.to_text(),
                    c.generators()
                );
            }
            half => println!("{:<35} <{:?}>", "(half lattice)", half.generators()),
        }
    }
    Ok(())
}
