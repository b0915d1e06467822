//! The three-dimensional family over S = <sp, sq, w>.
//!
//! `cargo run --example three_dimensional -- 9 11 2 1 4`

use kwsgp::kw3d::{
    base_semigroup, gap_cloud, gap_rep, strict_members, strict_points, type3_theorem,
    verify_apery_characterization, Kw3Params,
};

fn main() -> kwsgp::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let params = match args[..] {
        [p, q, r1, r2, s] => Kw3Params::new(p, q, r1, r2, s)?,
        _ => Kw3Params::new(5, 7, 2, 1, 3)?,
    };
    let base = base_semigroup(params)?;
    println!(
        "S = <{:?}>, F = {} (formula {}), symmetric {}",
        params.base_generators(),
        base.semigroup.frobenius(),
        base.frobenius_formula,
        base.symmetric
    );
    let cloud = gap_cloud(params);
    println!(
        "{} lattice points under the plane, genus {}",
        cloud.len(),
        base.semigroup.genus()
    );
    let g = base.semigroup.frobenius();
    println!("gap {g} sits at {:?}", gap_rep(params, g)?);

    for pt in strict_points(params) {
        let r = type3_theorem(params, pt)?;
        println!(
            "({},{},{}) h = {:>4}  PF {:?}  predicted {:?}  agrees {:?}",
            pt.x, pt.y, pt.z, r.h, r.actual_pf, r.predicted_pf, r.agrees
        );
    }
    let members = strict_members(params);
    let ok = members
        .iter()
        .filter(|k| verify_apery_characterization(k).agrees)
        .count();
    println!(
        "Apery intersection equality: {ok}/{} strict members",
        members.len()
    );
    Ok(())
}
