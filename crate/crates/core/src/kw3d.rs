//! The three-dimensional family built over `S = <sp, sq, w>`, `w = r1 p + r2 q`.
//!
//! Gaps of `S` correspond to lattice points through
//! `Gamma(x, y, z) = F(S) - x sp - y sq - z w`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::presentation::betti_elements;
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Kw3Params {
    p: i64,
    q: i64,
    r1: i64,
    r2: i64,
    s: i64,
}

impl Kw3Params {
    pub fn new(p: i64, q: i64, r1: i64, r2: i64, s: i64) -> Result<Self> {
        if !(1 < p && p < q) {
            return Err(Error::InvalidParams(format!(
                "need 1 < p < q, got p={p}, q={q}"
            )));
        }
        if r1 < 1 || r2 < 1 {
            return Err(Error::InvalidParams(format!(
                "need r1, r2 >= 1, got {r1}, {r2}"
            )));
        }
        if s < 2 {
            return Err(Error::InvalidParams(format!("need s >= 2, got {s}")));
        }
        let g = p.gcd(&q);
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }
        let w = r1 * p + r2 * q;
        let g = s.gcd(&w);
        if g != 1 {
            return Err(Error::NonCoprime { gcd: g });
        }
        Ok(Kw3Params { p, q, r1, r2, s })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r1(&self) -> i64 {
        self.r1
    }

    pub fn r2(&self) -> i64 {
        self.r2
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn w(&self) -> i64 {
        self.r1 * self.p + self.r2 * self.q
    }

    pub fn sp(&self) -> i64 {
        self.s * self.p
    }

    pub fn sq(&self) -> i64 {
        self.s * self.q
    }

    pub fn base_generators(&self) -> [i64; 3] {
        [self.sp(), self.sq(), self.w()]
    }

    /// `s(pq - p - q) + w(s - 1)`.
    pub fn frobenius_formula(&self) -> i64 {
        self.s * (self.p * self.q - self.p - self.q) + self.w() * (self.s - 1)
    }

    pub fn gamma(&self, pt: GapPoint3) -> i64 {
        self.frobenius_formula() - pt.x * self.sp() - pt.y * self.sq() - pt.z * self.w()
    }

    /// `2x <= q - 4`, `2y <= p - 4`, `z <= s - 2`.
    pub fn is_strict(&self, pt: GapPoint3) -> bool {
        2 * pt.x <= self.q - 4 && 2 * pt.y <= self.p - 4 && pt.z <= self.s - 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GapPoint3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl GapPoint3 {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        GapPoint3 { x, y, z }
    }

    pub fn le(&self, other: &GapPoint3) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSemigroup {
    pub semigroup: NumericalSemigroup,
    pub frobenius_formula: i64,
    pub frobenius_matches: bool,
    pub symmetric: bool,
}

pub fn base_semigroup(params: Kw3Params) -> Result<BaseSemigroup> {
    let semigroup = NumericalSemigroup::build(GeneratorSet::minimalize(&params.base_generators())?);
    let frobenius_formula = params.frobenius_formula();
    Ok(BaseSemigroup {
        frobenius_matches: semigroup.frobenius() == frobenius_formula,
        symmetric: semigroup.is_symmetric(),
        frobenius_formula,
        semigroup,
    })
}

fn base(params: Kw3Params) -> NumericalSemigroup {
    NumericalSemigroup::build(
        GeneratorSet::new(&params.base_generators()).expect("base generators are minimal"),
    )
}

/// The unique representation `t = Gamma(a, b, c)` with `a < q` and `c < s`.
///
/// Such a point is lexicographically below `(q, p, s)`; `b` may reach `p`
/// or more when `F(S) - t` is a large multiple of `s`.
pub fn gap_rep(params: Kw3Params, t: i64) -> Result<GapPoint3> {
    let s = base(params);
    if t < 0 || s.contains(t) {
        return Err(Error::NotAGap(t));
    }
    let reps = representations(params, t);
    if reps.len() != 1 {
        return Err(Error::TheoremViolation {
            theorem: "gap_rep".into(),
            detail: format!("gap {t} has {} canonical representations", reps.len()),
        });
    }
    Ok(reps[0])
}

fn representations(params: Kw3Params, t: i64) -> Vec<GapPoint3> {
    let target = params.frobenius_formula() - t;
    let mut out = Vec::new();
    for x in 0..params.q {
        for z in 0..params.s {
            let rest = target - x * params.sp() - z * params.w();
            if rest >= 0 && rest % params.sq() == 0 {
                out.push(GapPoint3::new(x, rest / params.sq(), z));
            }
        }
    }
    out
}

/// Representations inside the componentwise box `[0,q) x [0,p) x [0,s)`.
pub fn box_representations(params: Kw3Params, t: i64) -> Vec<GapPoint3> {
    representations(params, t)
        .into_iter()
        .filter(|pt| pt.y < params.p)
        .collect()
}

/// Canonical points (`x < q`, `z < s`) with `Gamma > 0`, i.e. strictly
/// below the bounding plane.
pub fn gap_cloud(params: Kw3Params) -> Vec<GapPoint3> {
    let mut out = Vec::new();
    for x in 0..params.q {
        for z in 0..params.s {
            let mut y = 0;
            while params.gamma(GapPoint3::new(x, y, z)) > 0 {
                out.push(GapPoint3::new(x, y, z));
                y += 1;
            }
        }
    }
    out.sort();
    out
}

pub fn strict_points(params: Kw3Params) -> Vec<GapPoint3> {
    gap_cloud(params)
        .into_iter()
        .filter(|&pt| params.is_strict(pt))
        .collect()
}

/// Points with `x <= q/2 - 1`, `y <= p/2 - 1`, `z <= s - 2`: the window
/// over which single-gap extensions are tabulated.
pub fn table_window_points(params: Kw3Params) -> Vec<GapPoint3> {
    gap_cloud(params)
        .into_iter()
        .filter(|pt| {
            2 * (pt.x + 1) <= params.q && 2 * (pt.y + 1) <= params.p && pt.z <= params.s - 2
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kw3Semigroup {
    pub params: Kw3Params,
    pub points: Vec<GapPoint3>,
    pub adjoined: Vec<i64>,
    pub semigroup: NumericalSemigroup,
    pub strict_class: bool,
}

impl Kw3Semigroup {
    pub fn generators(&self) -> &[i64] {
        self.semigroup.generators()
    }

    /// Nonzero elements of `Ap(H,sp) ∩ Ap(H,sq) ∩ Ap(H,w)`.
    pub fn apery_intersection(&self) -> Vec<i64> {
        let mut acc: Option<BTreeSet<i64>> = None;
        for m in self.params.base_generators() {
            let ap: BTreeSet<i64> = self
                .semigroup
                .apery(m)
                .expect("base generators lie in H")
                .elements
                .into_iter()
                .filter(|&v| v != 0)
                .collect();
            acc = Some(match acc {
                None => ap,
                Some(prev) => prev.intersection(&ap).copied().collect(),
            });
        }
        acc.unwrap_or_default().into_iter().collect()
    }
}

pub fn build_kw3(params: Kw3Params, points: &[GapPoint3]) -> Result<Kw3Semigroup> {
    let s = base(params);
    let mut adjoined = Vec::with_capacity(points.len());
    for &pt in points {
        let h = params.gamma(pt);
        if h <= 0 || s.contains(h) {
            return Err(Error::NotAGap(h));
        }
        if adjoined.contains(&h) {
            return Err(Error::DuplicateGenerator { value: h });
        }
        adjoined.push(h);
    }
    let mut raw = params.base_generators().to_vec();
    raw.extend(&adjoined);
    let gens = GeneratorSet::minimalize(&raw)?;
    if let Some(&dropped) = raw.iter().find(|v| !gens.as_slice().contains(v)) {
        return Err(Error::DuplicateGenerator { value: dropped });
    }
    Ok(Kw3Semigroup {
        params,
        points: points.to_vec(),
        strict_class: points.iter().all(|&pt| params.is_strict(pt)),
        adjoined,
        semigroup: NumericalSemigroup::build(gens),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperyReport {
    pub generators: Vec<i64>,
    pub strict_class: bool,
    pub adjoined: Vec<i64>,
    pub intersection: Vec<i64>,
    pub agrees: bool,
}

/// Compares the adjoined minimal generators with the Apéry intersection.
pub fn verify_apery_characterization(k: &Kw3Semigroup) -> AperyReport {
    let mut adjoined = k.adjoined.clone();
    adjoined.sort_unstable();
    let intersection = k.apery_intersection();
    AperyReport {
        generators: k.generators().to_vec(),
        strict_class: k.strict_class,
        agrees: adjoined == intersection,
        adjoined,
        intersection,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Type3Report {
    pub point: GapPoint3,
    pub h: i64,
    pub generators: Vec<i64>,
    pub strict_class: bool,
    pub px: i64,
    pub py: i64,
    pub pz: i64,
    pub pz_in_h: bool,
    pub applicable: bool,
    pub predicted_pf: Vec<i64>,
    pub actual_pf: Vec<i64>,
    pub actual_type: usize,
    pub agrees: Option<bool>,
}

/// Predicted pseudo-Frobenius set `{F - (x+1)sp, F - (y+1)sq, F - (z+1)w}`
/// against the oracle; only applicable for strict points with `pz` a gap.
pub fn type3_theorem(params: Kw3Params, point: GapPoint3) -> Result<Type3Report> {
    let k = build_kw3(params, &[point])?;
    let f = params.frobenius_formula();
    let px = f - (point.x + 1) * params.sp();
    let py = f - (point.y + 1) * params.sq();
    let pz = f - (point.z + 1) * params.w();
    let pz_in_h = k.semigroup.contains(pz);
    let mut predicted_pf = vec![px, py, pz];
    predicted_pf.sort_unstable();
    let actual_pf = k.semigroup.pseudo_frobenius().elements;
    let applicable = k.strict_class && !pz_in_h;
    Ok(Type3Report {
        point,
        h: k.adjoined[0],
        generators: k.generators().to_vec(),
        strict_class: k.strict_class,
        px,
        py,
        pz,
        pz_in_h,
        applicable,
        agrees: applicable.then(|| predicted_pf == actual_pf),
        actual_type: actual_pf.len(),
        predicted_pf,
        actual_pf,
    })
}

/// Every nonempty set of strict points that extends `S` minimally.
///
/// Sets containing two comparable points are never minimal, and minimality
/// is inherited by subsets, so the search prunes on both.
pub fn strict_members(params: Kw3Params) -> Vec<Kw3Semigroup> {
    let pts = strict_points(params);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_members(params, &pts, 0, &mut chosen, &mut out);
    out
}

fn extend_members(
    params: Kw3Params,
    pts: &[GapPoint3],
    start: usize,
    chosen: &mut Vec<GapPoint3>,
    out: &mut Vec<Kw3Semigroup>,
) {
    for i in start..pts.len() {
        let pt = pts[i];
        if chosen.iter().any(|c| c.le(&pt) || pt.le(c)) {
            continue;
        }
        chosen.push(pt);
        if let Ok(k) = build_kw3(params, chosen) {
            out.push(k);
            extend_members(params, pts, i + 1, chosen, out);
        }
        chosen.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleRow {
    pub h: i64,
    pub point: GapPoint3,
    pub semigroup_type: usize,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRow {
    pub first: i64,
    pub h: i64,
    pub point: GapPoint3,
    pub mu: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableScan {
    pub singles: Vec<SingleRow>,
    pub pairs: Vec<PairRow>,
}

/// Type and `mu` of `<sp, sq, w, h>` for every window point, and `mu` of
/// `<sp, sq, w, first, h>` for every other window point that keeps the
/// generators minimal. Rows are sorted by `h`.
pub fn scan_tables(params: Kw3Params, first: GapPoint3) -> Result<TableScan> {
    let window = table_window_points(params);
    let mut singles = Vec::new();
    for &pt in &window {
        if let Ok(k) = build_kw3(params, &[pt]) {
            singles.push(SingleRow {
                h: k.adjoined[0],
                point: pt,
                semigroup_type: k.semigroup.semigroup_type(),
                mu: betti_elements(&k.semigroup).mu,
            });
        }
    }
    singles.sort_by_key(|r| r.h);

    let first_h = build_kw3(params, &[first])?.adjoined[0];
    let mut pairs = Vec::new();
    for &pt in window.iter().filter(|&&pt| pt != first) {
        if let Ok(k) = build_kw3(params, &[first, pt]) {
            pairs.push(PairRow {
                first: first_h,
                h: k.adjoined[1],
                point: pt,
                mu: betti_elements(&k.semigroup).mu,
            });
        }
    }
    pairs.sort_by_key(|r| r.h);
    Ok(TableScan { singles, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: i64, q: i64, r1: i64, r2: i64, s: i64) -> Kw3Params {
        Kw3Params::new(p, q, r1, r2, s).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> GapPoint3 {
        GapPoint3::new(x, y, z)
    }

    #[test]
    fn base_semigroups() {
        for (prm, gens, f) in [
            (params(5, 7, 2, 1, 3), vec![15, 17, 21], 103),
            (params(9, 11, 2, 1, 4), vec![29, 36, 44], 403),
            (params(9, 11, 2, 1, 3), vec![27, 29, 33], 295),
        ] {
            let b = base_semigroup(prm).unwrap();
            assert_eq!(b.semigroup.generators(), gens.as_slice());
            assert_eq!(b.semigroup.frobenius(), f);
            assert!(b.frobenius_matches && b.symmetric);
        }
        assert_eq!(
            Kw3Params::new(5, 7, 1, 1, 4),
            Err(Error::NonCoprime { gcd: 4 })
        );
    }

    #[test]
    fn gap_representations() {
        assert_eq!(gap_rep(params(9, 11, 2, 1, 4), 221).unwrap(), pt(1, 2, 2));
        assert_eq!(gap_rep(params(9, 11, 2, 1, 3), 152).unwrap(), pt(3, 1, 1));
        assert_eq!(gap_rep(params(5, 7, 2, 1, 3), 37).unwrap(), pt(3, 1, 0));
        assert_eq!(gap_rep(params(5, 7, 2, 1, 3), 15), Err(Error::NotAGap(15)));
        // 403 - 7 = 11*36 = 9*44: no representation with both x < q and y < p
        let prm = params(9, 11, 2, 1, 4);
        assert!(box_representations(prm, 7).is_empty());
        assert_eq!(gap_rep(prm, 7).unwrap(), pt(0, 9, 0));
    }

    #[test]
    fn gap_cloud_counts_gaps() {
        for prm in [
            params(5, 7, 2, 1, 3),
            params(9, 11, 2, 1, 4),
            params(4, 5, 1, 2, 3),
        ] {
            let s = base_semigroup(prm).unwrap().semigroup;
            let cloud = gap_cloud(prm);
            assert_eq!(cloud.len(), s.genus());
            let values: BTreeSet<i64> = cloud.iter().map(|&p| prm.gamma(p)).collect();
            assert_eq!(values.into_iter().collect::<Vec<_>>(), s.gaps());
        }
    }

    #[test]
    fn build_examples() {
        let k = build_kw3(params(9, 11, 2, 1, 4), &[pt(1, 2, 2)]).unwrap();
        assert_eq!(k.generators(), &[29, 36, 44, 221]);
        assert!(k.strict_class);

        let k = build_kw3(params(5, 7, 2, 1, 3), &[pt(3, 1, 0)]).unwrap();
        assert_eq!(k.generators(), &[15, 17, 21, 37]);
        assert!(!k.strict_class);

        let k = build_kw3(
            params(9, 11, 2, 1, 4),
            &[pt(1, 2, 2), pt(3, 1, 1), pt(1, 3, 1)],
        )
        .unwrap();
        assert_eq!(k.generators(), &[29, 36, 44, 206, 221, 222]);
    }

    #[test]
    fn build_rejects_non_minimal() {
        let prm = params(5, 7, 2, 1, 3);
        // (0,0,0) gives 103 = 86 + 17
        assert_eq!(
            build_kw3(prm, &[pt(0, 0, 1), pt(0, 0, 0)]),
            Err(Error::DuplicateGenerator { value: 103 })
        );
        assert!(matches!(
            build_kw3(prm, &[pt(7, 0, 0)]),
            Err(Error::NotAGap(_))
        ));
    }

    #[test]
    fn apery_examples() {
        let k = build_kw3(params(9, 11, 2, 1, 4), &[pt(1, 2, 2)]).unwrap();
        assert_eq!(k.apery_intersection(), vec![221]);
        assert!(verify_apery_characterization(&k).agrees);
        let k = build_kw3(
            params(9, 11, 2, 1, 4),
            &[pt(1, 2, 2), pt(3, 1, 1), pt(1, 3, 1)],
        )
        .unwrap();
        assert!(verify_apery_characterization(&k).agrees);
    }

    #[test]
    fn type3_examples() {
        let r = type3_theorem(params(9, 11, 2, 1, 4), pt(1, 2, 2)).unwrap();
        assert_eq!(r.actual_pf, vec![271, 316, 331]);
        assert_eq!(r.agrees, Some(true));

        let r = type3_theorem(params(9, 11, 2, 1, 3), pt(3, 1, 1)).unwrap();
        assert_eq!(r.pz, 237);
        assert!(r.pz_in_h && !r.applicable);
        assert_eq!(r.actual_type, 4);

        let r = type3_theorem(params(5, 7, 2, 1, 3), pt(1, 1, 1)).unwrap();
        assert_eq!(r.h, 50);
        assert_eq!(r.actual_type, 3);
    }

    #[test]
    fn window_for_5_7() {
        let prm = params(5, 7, 2, 1, 3);
        let hs: Vec<i64> = table_window_points(prm)
            .into_iter()
            .map(|p| prm.gamma(p))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(hs, vec![35, 50, 52, 56, 65, 67, 71, 73, 82, 86, 88, 103]);
    }

    #[test]
    fn strict_members_small() {
        let members = strict_members(params(5, 7, 2, 1, 3));
        assert!(!members.is_empty());
        for k in &members {
            assert!(k.strict_class);
            assert!(verify_apery_characterization(k).agrees);
        }
    }
}
