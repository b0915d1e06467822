//! The class KW(p, q): numerical semigroups between `<p, q>` and `<p, q, r>`
//! obtained by adjoining gaps `pq - xp - yq` with `2x <= q` and `2y <= p`.
//!
//! A member is described by the corners of a monotone lattice path in the
//! grid `[1, q/2] x [1, p/2]`. Corners are stored by increasing `x` (hence
//! decreasing `y`).

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{GeneratorSet, NumericalSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct KwParams {
    p: i64,
    q: i64,
}

impl KwParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 3 || q <= p {
            return Err(Error::InvalidParams(format!(
                "need 3 <= p < q, got p={p}, q={q}"
            )));
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NonCoprime { gcd });
        }
        Ok(KwParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `floor(p/2)`: the largest admissible `y`.
    pub fn half_p(&self) -> i64 {
        self.p / 2
    }

    /// `floor(q/2)`: the largest admissible `x`.
    pub fn half_q(&self) -> i64 {
        self.q / 2
    }

    /// The third generator of the upper semigroup `<p, q, r>`.
    pub fn r(&self) -> i64 {
        if self.p % 2 == 0 {
            self.p / 2
        } else if self.q % 2 == 0 {
            self.q / 2
        } else {
            (self.p + self.q) / 2
        }
    }
}

pub fn gap_value(params: KwParams, x: i64, y: i64) -> i64 {
    params.p * params.q - x * params.p - y * params.q
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct KwCorners {
    params: KwParams,
    corners: Vec<(i64, i64)>,
}

impl KwCorners {
    pub fn new(params: KwParams, corners: Vec<(i64, i64)>) -> Result<Self> {
        for &(x, y) in &corners {
            if x < 1 || y < 1 || 2 * x > params.q || 2 * y > params.p {
                return Err(Error::InvalidCorners(format!(
                    "({x},{y}) outside 1 <= 2x <= {}, 1 <= 2y <= {}",
                    params.q, params.p
                )));
            }
            if is_degenerate(params, x, y) {
                return Err(Error::DegenerateCorner { x, y });
            }
        }
        for w in corners.windows(2) {
            let ((x1, y1), (x2, y2)) = (w[0], w[1]);
            if !(x1 < x2 && y1 > y2) {
                return Err(Error::InvalidCorners(format!(
                    "corners must have increasing x and decreasing y: ({x1},{y1}) then ({x2},{y2})"
                )));
            }
        }
        Ok(KwCorners { params, corners })
    }

    pub fn params(&self) -> KwParams {
        self.params
    }

    pub fn corners(&self) -> &[(i64, i64)] {
        &self.corners
    }

    /// Embedding dimension `n = 2 + #corners`.
    pub fn n(&self) -> usize {
        2 + self.corners.len()
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.corners
            .iter()
            .map(|&(x, y)| gap_value(self.params, x, y))
            .collect()
    }

    /// `(p, q, h_1, ..., h_{n-2})` in corner order.
    pub fn generators(&self) -> Vec<i64> {
        let mut g = vec![self.params.p, self.params.q];
        g.extend(self.gaps());
        g
    }
}

// The single corners whose gap is p/2 or q/2; they knock p or q out of the
// minimal generating set.
fn is_degenerate(params: KwParams, x: i64, y: i64) -> bool {
    let (p, q) = (params.p, params.q);
    (p % 2 == 0 && 2 * y == p && 2 * x == q - 1) || (q % 2 == 0 && 2 * x == q && 2 * y == p - 1)
}

/// One element of KW(p, q).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KwMember {
    Corners(KwCorners),
    /// `<p/2, q>` for even `p`.
    HalfP {
        params: KwParams,
    },
    /// `<p, q/2>` for even `q`.
    HalfQ {
        params: KwParams,
    },
}

impl KwMember {
    pub fn params(&self) -> KwParams {
        match self {
            KwMember::Corners(c) => c.params,
            KwMember::HalfP { params } | KwMember::HalfQ { params } => *params,
        }
    }

    pub fn generators(&self) -> Vec<i64> {
        match self {
            KwMember::Corners(c) => c.generators(),
            KwMember::HalfP { params } => vec![params.p / 2, params.q],
            KwMember::HalfQ { params } => vec![params.p, params.q / 2],
        }
    }

    pub fn corners(&self) -> Option<&KwCorners> {
        match self {
            KwMember::Corners(c) => Some(c),
            _ => None,
        }
    }

    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        match self {
            KwMember::Corners(c) => build_kw(c),
            other => NumericalSemigroup::generated_by(&other.generators()),
        }
    }
}

/// Builds `<p, q, h_1, ...>` and checks that every listed generator is minimal.
pub fn build_kw(c: &KwCorners) -> Result<NumericalSemigroup> {
    let gens = c.generators();
    let minimal = GeneratorSet::minimalize(&gens)?;
    if let Some(&value) = gens.iter().find(|g| !minimal.as_slice().contains(g)) {
        return Err(Error::NotMinimal { value });
    }
    Ok(NumericalSemigroup::build(minimal))
}

/// Every member of KW(p, q), ordered lexicographically by corner list. The two
/// half-parameter members (even `p` or `q`) appear at the position of the
/// corner they would otherwise occupy.
pub fn enumerate_kw(params: KwParams) -> Vec<KwMember> {
    let xs: Vec<i64> = (1..=params.half_q()).collect();
    let ys: Vec<i64> = (1..=params.half_p()).collect();
    let mut sets: Vec<Vec<(i64, i64)>> = Vec::new();
    for k in 0..=xs.len().min(ys.len()) {
        for xsub in combinations(&xs, k) {
            for ysub in combinations(&ys, k) {
                let corners = xsub
                    .iter()
                    .copied()
                    .zip(ysub.iter().rev().copied())
                    .collect();
                sets.push(corners);
            }
        }
    }
    sets.sort();
    sets.into_iter()
        .map(|corners| match corners.as_slice() {
            [(x, y)] if is_degenerate(params, *x, *y) => {
                if params.p % 2 == 0 {
                    KwMember::HalfP { params }
                } else {
                    KwMember::HalfQ { params }
                }
            }
            _ => KwMember::Corners(KwCorners { params, corners }),
        })
        .collect()
}

fn combinations(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    fn go(items: &[i64], k: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Recovers the corner data of `h` with respect to `params`, if `h` is a
/// corner-type member of KW(p, q).
pub fn is_kw(h: &NumericalSemigroup, params: KwParams) -> Option<KwCorners> {
    let gens = h.generators();
    let (p, q) = (params.p, params.q);
    if !gens.contains(&p) || !gens.contains(&q) {
        return None;
    }
    let mut corners = Vec::new();
    for &g in gens.iter().filter(|&&g| g != p && g != q) {
        // pq - g = xp + yq has at most one solution with 0 <= x < q
        let target = p * q - g;
        let found = (1..=params.half_q()).find_map(|x| {
            let rest = target - x * p;
            (rest > 0 && rest % q == 0 && 2 * (rest / q) <= p).then_some((x, rest / q))
        });
        corners.push(found?);
    }
    corners.sort();
    let c = KwCorners::new(params, corners).ok()?;
    let rebuilt = build_kw(&c).ok()?;
    (rebuilt.generators() == gens).then_some(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Step {
    Right,
    Down,
}

/// Monotone staircase from `(0, p')` to `(q', 0)` whose outer corners are
/// the corner points of a member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    pub width: i64,
    pub height: i64,
    pub steps: Vec<Step>,
    pub corners: Vec<(i64, i64)>,
}

pub fn render_path(c: &KwCorners) -> LatticePath {
    let width = c.params.half_q();
    let height = c.params.half_p();
    let mut steps = Vec::with_capacity((width + height) as usize);
    let (mut x, mut y) = (0, height);
    for &(cx, cy) in &c.corners {
        while y > cy {
            steps.push(Step::Down);
            y -= 1;
        }
        while x < cx {
            steps.push(Step::Right);
            x += 1;
        }
    }
    while y > 0 {
        steps.push(Step::Down);
        y -= 1;
    }
    while x < width {
        steps.push(Step::Right);
        x += 1;
    }
    LatticePath {
        width,
        height,
        steps,
        corners: c.corners.clone(),
    }
}

impl LatticePath {
    /// Vertices visited by the path, starting at `(0, height)`.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut pos = (0, self.height);
        let mut out = vec![pos];
        for s in &self.steps {
            match s {
                Step::Right => pos.0 += 1,
                Step::Down => pos.1 -= 1,
            }
            out.push(pos);
        }
        out
    }

    /// Re-reads the outer corners (a right step followed by a down step,
    /// strictly inside the quadrant) from the step sequence.
    pub fn extract_corners(&self) -> Vec<(i64, i64)> {
        let verts = self.vertices();
        let mut out = Vec::new();
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i] == Step::Right && self.steps[i + 1] == Step::Down {
                out.push(verts[i + 1]);
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Right => 'R',
                Step::Down => 'D',
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: i64, q: i64) -> KwParams {
        KwParams::new(p, q).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn gap_values() {
        assert_eq!(gap_value(params(5, 7), 2, 2), 11);
        assert_eq!(gap_value(params(5, 7), 3, 1), 13);
        assert_eq!(gap_value(params(7, 11), 11 / 2, 1), 31);
    }

    #[test]
    fn params_validation() {
        assert!(KwParams::new(2, 3).is_err());
        assert!(KwParams::new(7, 5).is_err());
        assert_eq!(KwParams::new(6, 9), Err(Error::NonCoprime { gcd: 3 }));
        assert_eq!(params(8, 9).r(), 4);
        assert_eq!(params(9, 10).r(), 5);
        assert_eq!(params(5, 7).r(), 6);
    }

    #[test]
    fn build_examples() {
        let c = KwCorners::new(params(5, 7), vec![(2, 2), (3, 1)]).unwrap();
        assert_eq!(build_kw(&c).unwrap().generators(), &[5, 7, 11, 13]);
        let c = KwCorners::new(params(5, 7), vec![]).unwrap();
        assert_eq!(build_kw(&c).unwrap().generators(), &[5, 7]);
        let c = KwCorners::new(params(7, 11), vec![(3, 3), (4, 2), (5, 1)]).unwrap();
        let h = build_kw(&c).unwrap();
        assert_eq!(h.generators(), &[7, 11, 23, 27, 31]);
        assert_eq!(h.embedding_dimension(), 5);
    }

    #[test]
    fn corner_validation() {
        let p = params(5, 7);
        assert!(matches!(
            KwCorners::new(p, vec![(4, 1)]),
            Err(Error::InvalidCorners(_))
        ));
        assert!(matches!(
            KwCorners::new(p, vec![(1, 3)]),
            Err(Error::InvalidCorners(_))
        ));
        assert!(matches!(
            KwCorners::new(p, vec![(2, 1), (3, 2)]),
            Err(Error::InvalidCorners(_))
        ));
        assert!(matches!(
            KwCorners::new(p, vec![(0, 1)]),
            Err(Error::InvalidCorners(_))
        ));
        assert_eq!(
            KwCorners::new(params(8, 9), vec![(4, 4)]),
            Err(Error::DegenerateCorner { x: 4, y: 4 })
        );
    }

    #[test]
    fn enumeration_counts_match_antichain_oracle() {
        // oracle: count subsets of the grid that are antichains for the
        // "both coordinates smaller-or-equal" order, by brute force over bitmasks
        for (p, q) in [(5, 7), (3, 4), (7, 9), (8, 9)] {
            let pr = params(p, q);
            let cells: Vec<(i64, i64)> = (1..=q / 2)
                .flat_map(|x| (1..=p / 2).map(move |y| (x, y)))
                .collect();
            let mut count = 0;
            for mask in 0u32..(1 << cells.len()) {
                let pts: Vec<_> = (0..cells.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| cells[i])
                    .collect();
                let antichain = pts
                    .iter()
                    .all(|a| pts.iter().all(|b| a == b || !(a.0 <= b.0 && a.1 <= b.1)));
                if antichain {
                    count += 1;
                }
            }
            assert_eq!(enumerate_kw(pr).len(), count, "({p},{q})");
        }
        assert_eq!(enumerate_kw(params(5, 7)).len() as u64, binom(5, 2));
    }

    #[test]
    fn enumeration_shape_5_7() {
        let all = enumerate_kw(params(5, 7));
        assert_eq!(all.len(), 10);
        let sizes: Vec<usize> = all
            .iter()
            .map(|m| m.corners().unwrap().corners().len())
            .collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 0).count(), 1);
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 6);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 3);
        let max_n = all.iter().map(|m| m.generators().len()).max().unwrap();
        assert_eq!(max_n, 2 + 5 / 2);
    }

    #[test]
    fn enumeration_3_4() {
        let all = enumerate_kw(params(3, 4));
        // x in {1,2}, y = 1; the corner (2,1) gives <3,2>
        assert_eq!(all.len(), 3);
        assert!(all.contains(&KwMember::HalfQ {
            params: params(3, 4)
        }));
        assert_eq!(all[1].generators(), vec![3, 4, 5]);
    }

    #[test]
    fn half_members_have_embedding_dimension_two() {
        let m = enumerate_kw(params(8, 9));
        let half: Vec<_> = m
            .iter()
            .filter(|m| matches!(m, KwMember::HalfP { .. }))
            .collect();
        assert_eq!(half.len(), 1);
        assert_eq!(half[0].semigroup().unwrap().generators(), &[4, 9]);
    }

    #[test]
    fn recognize_members() {
        let h = NumericalSemigroup::generated_by(&[5, 7, 11, 13]).unwrap();
        assert_eq!(
            is_kw(&h, params(5, 7)).unwrap().corners(),
            &[(2, 2), (3, 1)]
        );
        let h = NumericalSemigroup::generated_by(&[15, 21, 17, 37]).unwrap();
        assert!(is_kw(&h, params(5, 7)).is_none());
        let h = NumericalSemigroup::generated_by(&[5, 7]).unwrap();
        assert!(is_kw(&h, params(5, 7)).unwrap().corners().is_empty());
        // 5,7 plus a gap outside the box
        let h = NumericalSemigroup::generated_by(&[5, 7, 8]).unwrap();
        assert!(is_kw(&h, params(5, 7)).is_none());
    }

    #[test]
    fn paths() {
        let p = params(5, 7);
        let empty = render_path(&KwCorners::new(p, vec![]).unwrap());
        assert_eq!(empty.to_text(), "DDRRR");
        assert!(empty.extract_corners().is_empty());

        let two = render_path(&KwCorners::new(p, vec![(2, 2), (3, 1)]).unwrap());
        assert_eq!(two.to_text(), "RRDRD");
        assert_eq!(two.extract_corners(), vec![(2, 2), (3, 1)]);

        let one = render_path(&KwCorners::new(p, vec![(1, 2)]).unwrap());
        assert_eq!(one.to_text(), "RDDRR");
        assert_eq!(one.extract_corners(), vec![(1, 2)]);
    }
}
