//! Defining ideals as sets of pure-difference binomials.
//!
//! Ideal questions are answered combinatorially: for binomials `m - m'` with
//! equal degree, `m - m'` lies in the ideal generated by a set `B` exactly
//! when `m` and `m'` are connected in the fiber of their degree, where each
//! element of `B` acts as a move in both directions.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kw2d::KwCorners;
use crate::poly::{Binomial, Monomial};
use crate::principal::principal_matrix_for;
use crate::semigroup::{factorizations_over, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledBinomial {
    pub label: String,
    pub binomial: Binomial,
}

struct Ctx {
    n: usize,
    p: i64,
    q: i64,
    xs: Vec<i64>,
    ys: Vec<i64>,
    weights: Vec<i64>,
}

impl Ctx {
    fn new(c: &KwCorners) -> Result<Self> {
        if c.n() < 3 {
            return Err(Error::InvalidCorners(
                "presentations need at least one corner".into(),
            ));
        }
        Ok(Ctx {
            n: c.n(),
            p: c.params().p(),
            q: c.params().q(),
            xs: c.corners().iter().map(|&(x, _)| x).collect(),
            ys: c.corners().iter().map(|&(_, y)| y).collect(),
            weights: c.generators(),
        })
    }

    fn mono(&self, pairs: &[(usize, i64)]) -> Result<Monomial> {
        Monomial::from_pairs(self.n, pairs)
    }

    /// Variable index of `u_i`, 1-based as in the formulas.
    fn ui(i: usize) -> usize {
        1 + i
    }

    fn x(&self, i: usize) -> i64 {
        self.xs[i - 1]
    }

    fn y(&self, i: usize) -> i64 {
        self.ys[i - 1]
    }

    fn binomial(&self, a: Monomial, b: Monomial) -> Result<Option<Binomial>> {
        Binomial::new(a, b, &self.weights)
    }
}

/// The `C(n, 2)` binomials `f_ij`, `g_i`, `h1`, `h2`.
pub fn appendix_generators(c: &KwCorners) -> Result<Vec<LabeledBinomial>> {
    let ctx = Ctx::new(c)?;
    let k = ctx.n - 2;
    let (p, q) = (ctx.p, ctx.q);
    let mut out = Vec::new();
    let mut push = |label: String, a: Monomial, b: Monomial| -> Result<()> {
        let binomial = ctx
            .binomial(a, b)?
            .ok_or_else(|| Error::InvalidCorners(format!("{label} vanishes")))?;
        out.push(LabeledBinomial { label, binomial });
        Ok(())
    };
    for i in 1..=k {
        for j in i..=k {
            push(
                format!("f({i},{j})"),
                ctx.mono(&[(Ctx::ui(i), 1), (Ctx::ui(j), 1)])?,
                ctx.mono(&[(0, q - ctx.x(i) - ctx.x(j)), (1, p - ctx.y(i) - ctx.y(j))])?,
            )?;
        }
    }
    for i in 1..k {
        push(
            format!("g({i})"),
            ctx.mono(&[(1, ctx.y(i) - ctx.y(i + 1)), (Ctx::ui(i), 1)])?,
            ctx.mono(&[(0, ctx.x(i + 1) - ctx.x(i)), (Ctx::ui(i + 1), 1)])?,
        )?;
    }
    push(
        "h1".into(),
        ctx.mono(&[(1, p - ctx.y(1))])?,
        ctx.mono(&[(0, ctx.x(1)), (Ctx::ui(1), 1)])?,
    )?;
    push(
        "h2".into(),
        ctx.mono(&[(1, ctx.y(k)), (Ctx::ui(k), 1)])?,
        ctx.mono(&[(0, q - ctx.x(k))])?,
    )?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetMatrix {
    pub label: String,
    pub entries: [[Monomial; 3]; 2],
}

impl DetMatrix {
    /// Nonzero 2x2 minors, labeled by their column pair.
    pub fn minors(&self, weights: &[i64]) -> Result<Vec<LabeledBinomial>> {
        let e = &self.entries;
        let mut out = Vec::new();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let plus = e[0][a].mul(&e[1][b]);
            let minus = e[0][b].mul(&e[1][a]);
            if let Some(binomial) = Binomial::new(plus, minus, weights)? {
                out.push(LabeledBinomial {
                    label: format!("{}[{},{}]", self.label, a + 1, b + 1),
                    binomial,
                });
            }
        }
        Ok(out)
    }
}

/// `A(i,j)` for `i < j`, then `B` and `C`.
pub fn determinantal_matrices(c: &KwCorners) -> Result<Vec<DetMatrix>> {
    let ctx = Ctx::new(c)?;
    let k = ctx.n - 2;
    let (p, q) = (ctx.p, ctx.q);
    let mut out = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            out.push(DetMatrix {
                label: format!("A({i},{j})"),
                entries: [
                    [
                        ctx.mono(&[(Ctx::ui(i), 1)])?,
                        ctx.mono(&[(0, q - 2 * ctx.x(j)), (1, p - ctx.y(i) - ctx.y(j))])?,
                        ctx.mono(&[(Ctx::ui(j), 1)])?,
                    ],
                    [
                        ctx.mono(&[(0, ctx.x(j) - ctx.x(i))])?,
                        ctx.mono(&[(Ctx::ui(j), 1)])?,
                        ctx.mono(&[(1, ctx.y(i) - ctx.y(j))])?,
                    ],
                ],
            });
        }
    }
    let (x1, xk, y1, yk) = (ctx.x(1), ctx.x(k), ctx.y(1), ctx.y(k));
    out.push(DetMatrix {
        label: "B".into(),
        entries: [
            [
                ctx.mono(&[(1, yk)])?,
                ctx.mono(&[(0, q - x1 - xk)])?,
                ctx.mono(&[(Ctx::ui(1), 1)])?,
            ],
            [
                ctx.mono(&[(0, x1)])?,
                ctx.mono(&[(Ctx::ui(k), 1)])?,
                ctx.mono(&[(1, p - y1 - yk)])?,
            ],
        ],
    });
    out.push(DetMatrix {
        label: "C".into(),
        entries: [
            [
                ctx.mono(&[(0, q - x1 - xk), (1, p - 2 * y1)])?,
                ctx.mono(&[(Ctx::ui(1), 1)])?,
                ctx.mono(&[(Ctx::ui(k), 1)])?,
            ],
            [
                ctx.mono(&[(Ctx::ui(1), 1)])?,
                ctx.mono(&[(0, xk - x1)])?,
                ctx.mono(&[(1, y1 - yk)])?,
            ],
        ],
    });
    Ok(out)
}

/// All nonzero minors, deduplicated (binomials are sign-normalized).
pub fn determinantal_minors(c: &KwCorners) -> Result<Vec<LabeledBinomial>> {
    let weights = c.generators();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in determinantal_matrices(c)? {
        for lb in m.minors(&weights)? {
            if seen.insert(lb.binomial.clone()) {
                out.push(lb);
            }
        }
    }
    Ok(out)
}

/// Connected components of the fiber of `degree` under the moves `moves`.
pub fn fiber_components(weights: &[i64], moves: &[Binomial], degree: i64) -> Vec<Vec<Monomial>> {
    let fiber: Vec<Monomial> = factorizations_over(weights, degree)
        .into_iter()
        .map(|f| Monomial(f.0))
        .collect();
    let index: HashMap<&Monomial, usize> = fiber.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut uf = UnionFind::new(fiber.len());
    for (i, m) in fiber.iter().enumerate() {
        for b in moves {
            for (from, to) in [(&b.plus, &b.minus), (&b.minus, &b.plus)] {
                if from.divides(m) {
                    let image = to.mul(&from.quotient_of(m));
                    if let Some(&j) = index.get(&image) {
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Monomial>> = HashMap::new();
    for (i, m) in fiber.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(m.clone());
    }
    let mut comps: Vec<Vec<Monomial>> = groups.into_values().collect();
    comps.sort();
    comps
}

/// Whether `b` lies in the ideal generated by `moves`.
pub fn in_binomial_ideal(weights: &[i64], moves: &[Binomial], b: &Binomial) -> bool {
    fiber_components(weights, moves, b.degree)
        .iter()
        .any(|comp| comp.contains(&b.plus) && comp.contains(&b.minus))
}

/// Whether `moves` (homogeneous binomials) generate the full defining ideal of
/// the monoid spanned by `weights`: every fiber at a Betti degree must be
/// connected.
pub fn generates_defining_ideal(weights: &[i64], moves: &[Binomial]) -> bool {
    let report = betti_elements_over(weights);
    report
        .elements
        .iter()
        .all(|e| fiber_components(weights, moves, e.degree).len() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorComparison {
    pub literal_equal: bool,
    /// Listed binomials that are not minors.
    pub missing: Vec<Binomial>,
    /// Minors that are not listed binomials.
    pub extra: Vec<Binomial>,
    /// Both sets generate the same ideal.
    pub same_ideal: bool,
}

pub fn compare_minors(c: &KwCorners) -> Result<MinorComparison> {
    let weights = c.generators();
    let appendix: Vec<Binomial> = appendix_generators(c)?
        .into_iter()
        .map(|l| l.binomial)
        .collect();
    let minors: Vec<Binomial> = determinantal_minors(c)?
        .into_iter()
        .map(|l| l.binomial)
        .collect();
    let a: BTreeSet<&Binomial> = appendix.iter().collect();
    let m: BTreeSet<&Binomial> = minors.iter().collect();
    let missing: Vec<Binomial> = a.difference(&m).map(|&b| b.clone()).collect();
    let extra: Vec<Binomial> = m.difference(&a).map(|&b| b.clone()).collect();
    let same_ideal = missing
        .iter()
        .all(|b| in_binomial_ideal(&weights, &minors, b))
        && extra
            .iter()
            .all(|b| in_binomial_ideal(&weights, &appendix, b));
    Ok(MinorComparison {
        literal_equal: missing.is_empty() && extra.is_empty(),
        missing,
        extra,
        same_ideal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalBinomial {
    pub generator: i64,
    pub multiple: i64,
    pub binomial: Binomial,
}

/// One binomial `x_i^{c_i} - prod x_j^{a_ij}` per generator, variables in
/// the order of `H.generators()`.
pub fn critical_binomials(h: &NumericalSemigroup) -> Result<Vec<CriticalBinomial>> {
    let gens = h.generators();
    let pm = principal_matrix_for(gens)?;
    let n = gens.len();
    pm.entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let c = -row[i];
            let lead = Monomial::from_pairs(n, &[(i, c)])?;
            let pairs: Vec<(usize, i64)> = row
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(j, &a)| (j, a))
                .collect();
            let rest = Monomial::from_pairs(n, &pairs)?;
            let binomial =
                Binomial::new(lead, rest, gens)?.expect("a critical relation is never trivial");
            Ok(CriticalBinomial {
                generator: gens[i],
                multiple: c,
                binomial,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiElement {
    pub degree: i64,
    pub new_generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub elements: Vec<BettiElement>,
    pub mu: usize,
}

impl BettiReport {
    pub fn degrees(&self) -> Vec<i64> {
        self.elements.iter().map(|e| e.degree).collect()
    }
}

pub fn betti_elements(h: &NumericalSemigroup) -> BettiReport {
    betti_elements_over(h.generators())
}

/// Betti elements of the monoid spanned by `weights` (assumed to generate a
/// numerical semigroup minimally).
///
/// Past `F + min + max` every factorization graph is connected, so the scan
/// stops there.
pub fn betti_elements_over(weights: &[i64]) -> BettiReport {
    let h = NumericalSemigroup::generated_by(weights).expect("valid generators");
    let bound = h.frobenius() + weights.iter().min().unwrap() + weights.iter().max().unwrap();
    let mut elements = Vec::new();
    for t in 1..=bound {
        if !h.contains(t) {
            continue;
        }
        let facts = factorizations_over(weights, t);
        if facts.len() < 2 {
            continue;
        }
        let mut uf = UnionFind::new(facts.len());
        for var in 0..weights.len() {
            let mut first = None;
            for (i, f) in facts.iter().enumerate() {
                if f.0[var] > 0 {
                    match first {
                        None => first = Some(i),
                        Some(r) => uf.union(r, i),
                    }
                }
            }
        }
        let comps = uf.components();
        if comps > 1 {
            elements.push(BettiElement {
                degree: t,
                new_generators: comps - 1,
            });
        }
    }
    let mu = elements.iter().map(|e| e.new_generators).sum();
    BettiReport { elements, mu }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub generators: Vec<i64>,
    pub n: usize,
    pub mu: usize,
    pub expected_mu: usize,
    pub semigroup_type: usize,
    pub expected_type: usize,
    pub betti: BettiReport,
    pub betti_degrees_covered: bool,
    pub appendix_generates: bool,
    pub minors: Option<MinorComparison>,
    pub passes: bool,
}

pub fn binomial_coefficient_2(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// Checks `mu = C(n,2)`, type `n - 1`, and that the appendix binomials and
/// the determinantal minors generate the defining ideal.
pub fn check_kw_presentation(c: &KwCorners) -> Result<PresentationReport> {
    let weights = c.generators();
    let n = weights.len();
    let h = NumericalSemigroup::generated_by(&weights)?;
    let betti = betti_elements_over(&weights);
    let semigroup_type = h.semigroup_type();
    let (appendix_degrees, appendix_generates, minors) = if n >= 3 {
        let appendix: Vec<Binomial> = appendix_generators(c)?
            .into_iter()
            .map(|l| l.binomial)
            .collect();
        let degrees: BTreeSet<i64> = appendix.iter().map(|b| b.degree).collect();
        let generates = generates_defining_ideal(&weights, &appendix);
        (degrees, generates, Some(compare_minors(c)?))
    } else {
        let d = c.params().p() * c.params().q();
        (BTreeSet::from([d]), true, None)
    };
    let betti_degrees_covered = betti
        .elements
        .iter()
        .all(|e| appendix_degrees.contains(&e.degree));
    let expected_mu = binomial_coefficient_2(n);
    let expected_type = n - 1;
    let passes = betti.mu == expected_mu
        && semigroup_type == expected_type
        && betti_degrees_covered
        && appendix_generates
        && minors.as_ref().is_none_or(|m| m.same_ideal);
    Ok(PresentationReport {
        generators: weights,
        n,
        mu: betti.mu,
        expected_mu,
        semigroup_type,
        expected_type,
        betti,
        betti_degrees_covered,
        appendix_generates,
        minors,
        passes,
    })
}

pub fn verify_kw_presentation(c: &KwCorners) -> Result<PresentationReport> {
    let report = check_kw_presentation(c)?;
    if !report.passes {
        return Err(Error::TheoremViolation {
            theorem: "presentation".into(),
            detail: serde_json::to_string(&report).expect("serializable"),
        });
    }
    Ok(report)
}
