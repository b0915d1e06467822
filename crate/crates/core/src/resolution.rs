//! Explicit graded free resolutions for embedding dimensions 3 and 4.
//!
//! A complex is stored as its differentials `D_1, D_2, ...` with `D_1` the
//! row of ideal generators; `D_t * D_{t+1} = 0` is checked by exact
//! polynomial multiplication.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kw2d::{KwCorners, KwParams};
use crate::poly::{mat_mul, rank_mod, variable_name, Monomial, Poly, PolyMatrix, SignedTerm};
use crate::semigroup::factorizations_over;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedComplex {
    pub corners: KwCorners,
    pub weights: Vec<i64>,
    pub labels: Vec<String>,
    pub matrices: Vec<PolyMatrix>,
}

impl GradedComplex {
    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Ranks of the free modules `F_0, F_1, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![self.matrices.first().map_or(0, Vec::len)];
        r.extend(self.matrices.iter().map(|m| m.first().map_or(0, Vec::len)));
        r
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (label, m) in self.labels.iter().zip(&self.matrices) {
            let cols = m.first().map_or(0, Vec::len);
            out.push_str(&format!("{label} ({}x{cols})\n", m.len()));
            out.push_str(&matrix_text(m));
        }
        out
    }

    pub fn to_export(&self) -> ComplexExport {
        let report = verify_complex(self);
        ComplexExport {
            generators: self.weights.clone(),
            corners: self.corners.corners().to_vec(),
            variables: (0..self.nvars()).map(variable_name).collect(),
            ranks: self.ranks(),
            shifts: report.shifts,
            matrices: self
                .labels
                .iter()
                .zip(&self.matrices)
                .map(|(label, m)| MatrixExport {
                    label: label.clone(),
                    rows: m.len(),
                    cols: m.first().map_or(0, Vec::len),
                    entries: m
                        .iter()
                        .map(|row| row.iter().map(Poly::signed_terms).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Plain-text rendering with right-aligned columns.
pub fn matrix_text(m: &PolyMatrix) -> String {
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        out.push_str("  ");
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixExport {
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Vec<SignedTerm>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexExport {
    pub generators: Vec<i64>,
    pub corners: Vec<(i64, i64)>,
    pub variables: Vec<String>,
    pub ranks: Vec<usize>,
    pub shifts: Vec<Vec<i64>>,
    pub matrices: Vec<MatrixExport>,
}

const U: usize = 0;
const V: usize = 1;
const U1: usize = 2;
const U2: usize = 3;

struct Builder {
    nvars: usize,
}

impl Builder {
    /// A single signed monomial.
    fn t(&self, sign: i64, pairs: &[(usize, i64)]) -> Result<Poly> {
        Ok(Poly::monomial(
            Monomial::from_pairs(self.nvars, pairs)?,
            sign,
        ))
    }

    /// `a - b` for monomials `a`, `b`.
    fn bin(&self, a: &[(usize, i64)], b: &[(usize, i64)]) -> Result<Poly> {
        Ok(self.t(1, a)?.add(&self.t(-1, b)?))
    }
}

fn zero() -> Poly {
    Poly::zero()
}

pub fn resolution_ed3(p: i64, q: i64, x1: i64, y1: i64) -> Result<GradedComplex> {
    let corners = KwCorners::new(KwParams::new(p, q)?, vec![(x1, y1)])?;
    let b = Builder { nvars: 3 };
    let d1 = vec![vec![
        b.bin(&[(V, p - y1)], &[(U, x1), (U1, 1)])?,
        b.bin(&[(U, q - 2 * x1), (V, p - 2 * y1)], &[(U1, 2)])?,
        b.bin(&[(U, q - x1)], &[(V, y1), (U1, 1)])?,
    ]];
    let d2 = vec![
        vec![b.t(1, &[(U1, 1)])?, b.t(-1, &[(U, q - 2 * x1)])?],
        vec![b.t(-1, &[(U, x1)])?, b.t(1, &[(V, y1)])?],
        vec![b.t(1, &[(V, p - 2 * y1)])?, b.t(-1, &[(U1, 1)])?],
    ];
    Ok(GradedComplex {
        weights: corners.generators(),
        corners,
        labels: vec!["D1".into(), "D2".into()],
        matrices: vec![d1, d2],
    })
}

/// The complex `S^3 -> S^8 -> S^6 -> S`, with matrices listed as
/// `A3, A2, A1`.
///
/// The formulas contain the exponents `2x1 - x2` and `2y2 - y1`; corner
/// pairs making either negative are rejected with `NegativeExponent`.
pub fn resolution_ed4(p: i64, q: i64, c1: (i64, i64), c2: (i64, i64)) -> Result<GradedComplex> {
    let corners = KwCorners::new(KwParams::new(p, q)?, vec![c1, c2])?;
    let ((x1, y1), (x2, y2)) = (c1, c2);
    let b = Builder { nvars: 4 };

    let a3 = vec![vec![
        b.bin(&[(U, q - 2 * x1), (V, p - 2 * y1)], &[(U1, 2)])?,
        b.bin(&[(U, q - x1 - x2), (V, p - y1 - y2)], &[(U1, 1), (U2, 1)])?,
        b.bin(&[(U, q - 2 * x2), (V, p - 2 * y2)], &[(U2, 2)])?,
        b.bin(&[(V, y1 - y2), (U1, 1)], &[(U, x2 - x1), (U2, 1)])?,
        b.bin(&[(V, y2), (U2, 1)], &[(U, q - x2)])?,
        b.bin(&[(U, x1), (U1, 1)], &[(V, p - y1)])?,
    ]];

    let a2 = vec![
        vec![
            b.t(-1, &[(U, x1)])?,
            b.t(-1, &[(U, 2 * x1 - x2), (V, y1 - y2)])?,
            zero(),
            zero(),
            zero(),
            b.t(-1, &[(U2, 1)])?,
            b.t(-1, &[(V, y1 - y2)])?,
            zero(),
        ],
        vec![
            zero(),
            zero(),
            zero(),
            b.t(-1, &[(U2, 1)])?,
            zero(),
            b.t(1, &[(U1, 1)])?,
            b.t(1, &[(U, x2 - x1)])?,
            b.t(-1, &[(V, y1 - y2)])?,
        ],
        vec![
            zero(),
            zero(),
            b.t(1, &[(V, y2)])?,
            b.t(1, &[(U1, 1)])?,
            b.t(1, &[(U, x2 - x1), (V, 2 * y2 - y1)])?,
            zero(),
            zero(),
            b.t(1, &[(U, x2 - x1)])?,
        ],
        vec![
            b.t(-1, &[(V, p + y2 - 2 * y1)])?,
            b.t(-1, &[(U, 2 * x1 - x2), (U1, 1)])?,
            b.t(-1, &[(U, q + x1 - 2 * x2)])?,
            b.t(-1, &[(U, q - 2 * x2), (V, p - y1 - y2)])?,
            b.t(-1, &[(V, 2 * y2 - y1), (U2, 1)])?,
            b.t(-1, &[(U, q - x1 - x2), (V, p - 2 * y1)])?,
            b.t(-1, &[(U1, 1)])?,
            b.t(-1, &[(U2, 1)])?,
        ],
        vec![
            b.t(-1, &[(U, x2 - x1), (V, p - 2 * y1)])?,
            b.t(-1, &[(V, p - y1 - y2)])?,
            b.t(1, &[(U2, 1)])?,
            zero(),
            b.t(1, &[(U1, 1)])?,
            zero(),
            zero(),
            zero(),
        ],
        vec![
            b.t(-1, &[(U1, 1)])?,
            b.t(-1, &[(U2, 1)])?,
            b.t(1, &[(U, q - 2 * x2), (V, y1 - y2)])?,
            zero(),
            b.t(1, &[(U, q - x1 - x2)])?,
            zero(),
            zero(),
            zero(),
        ],
    ];

    let a1 = vec![
        vec![
            b.t(1, &[(U2, 1)])?,
            b.t(-1, &[(U, q - 2 * x2), (V, y1 - y2)])?,
            zero(),
        ],
        vec![b.t(-1, &[(U1, 1)])?, b.t(1, &[(U, q - x1 - x2)])?, zero()],
        vec![
            b.t(1, &[(U, x2 - x1), (V, p - 2 * y1)])?,
            b.t(-1, &[(U1, 1)])?,
            zero(),
        ],
        vec![zero(), b.t(1, &[(V, y2)])?, b.t(1, &[(U, x2 - x1)])?],
        vec![b.t(-1, &[(V, p - y1 - y2)])?, b.t(1, &[(U2, 1)])?, zero()],
        vec![b.t(-1, &[(U, x1)])?, zero(), b.t(-1, &[(V, y1 - y2)])?],
        vec![
            b.t(1, &[(U, 2 * x1 - x2), (U1, 1)])?,
            zero(),
            b.t(1, &[(U2, 1)])?,
        ],
        vec![
            zero(),
            b.t(-1, &[(V, 2 * y2 - y1), (U2, 1)])?,
            b.t(-1, &[(U1, 1)])?,
        ],
    ];

    Ok(GradedComplex {
        weights: corners.generators(),
        corners,
        labels: vec!["A3".into(), "A2".into(), "A1".into()],
        matrices: vec![a3, a2, a1],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexFailure {
    pub check: String,
    pub matrix: String,
    pub row: usize,
    pub col: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub passes: bool,
    pub ranks: Vec<usize>,
    /// Inferred degree shifts of the basis elements of each free module.
    pub shifts: Vec<Vec<i64>>,
    pub products_zero: bool,
    pub homogeneous: bool,
    pub unit_coefficients: bool,
    pub first_failure: Option<ComplexFailure>,
}

fn failure(check: &str, matrix: &str, row: usize, col: usize, detail: String) -> ComplexFailure {
    ComplexFailure {
        check: check.into(),
        matrix: matrix.into(),
        row: row + 1,
        col: col + 1,
        detail,
    }
}

/// Exact check of shapes, products, homogeneity and coefficients.
///
/// Row and column positions in failures are 1-based.
pub fn verify_complex(c: &GradedComplex) -> ComplexReport {
    let mut first_failure = None;
    let mut note = |f: ComplexFailure| {
        if first_failure.is_none() {
            first_failure = Some(f);
        }
    };

    let mut unit_coefficients = true;
    for (label, m) in c.labels.iter().zip(&c.matrices) {
        for (i, row) in m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.has_unit_coefficients() {
                    unit_coefficients = false;
                    note(failure("coefficients", label, i, j, e.to_string()));
                }
            }
        }
    }

    let mut products_zero = true;
    for t in 0..c.matrices.len().saturating_sub(1) {
        let (a, b) = (&c.matrices[t], &c.matrices[t + 1]);
        let label = format!("{}*{}", c.labels[t], c.labels[t + 1]);
        if a.first().map_or(0, Vec::len) != b.len() {
            products_zero = false;
            note(failure(
                "shape",
                &label,
                0,
                0,
                "dimensions do not compose".into(),
            ));
            continue;
        }
        for (i, row) in mat_mul(a, b).iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    products_zero = false;
                    note(failure("product", &label, i, j, e.to_string()));
                }
            }
        }
    }

    let mut homogeneous = true;
    let mut shifts = vec![vec![0i64; c.ranks()[0]]];
    for (label, m) in c.labels.iter().zip(&c.matrices) {
        let row_shifts = shifts.last().expect("nonempty").clone();
        let cols = m.first().map_or(0, Vec::len);
        let mut col_shifts = vec![0i64; cols];
        for (j, slot) in col_shifts.iter_mut().enumerate() {
            let mut seen: Option<i64> = None;
            for (i, row) in m.iter().enumerate() {
                let e = &row[j];
                if e.is_zero() {
                    continue;
                }
                let degs = e.degrees(&c.weights);
                if degs.len() != 1 {
                    homogeneous = false;
                    note(failure(
                        "homogeneity",
                        label,
                        i,
                        j,
                        format!("{e} has degrees {degs:?}"),
                    ));
                    continue;
                }
                let s = row_shifts.get(i).copied().unwrap_or(0) + degs[0];
                match seen {
                    None => seen = Some(s),
                    Some(prev) if prev != s => {
                        homogeneous = false;
                        note(failure(
                            "homogeneity",
                            label,
                            i,
                            j,
                            format!("column shift {s} disagrees with {prev}"),
                        ));
                    }
                    _ => {}
                }
            }
            match seen {
                Some(s) => *slot = s,
                None => {
                    homogeneous = false;
                    note(failure("homogeneity", label, 0, j, "zero column".into()));
                }
            }
        }
        shifts.push(col_shifts);
    }

    ComplexReport {
        passes: products_zero && homogeneous && unit_coefficients,
        ranks: c.ranks(),
        shifts,
        products_zero,
        homogeneous,
        unit_coefficients,
        first_failure,
    }
}

/// Errors with `ComplexBroken` unless the complex verifies.
pub fn ensure_complex(c: &GradedComplex) -> Result<ComplexReport> {
    let r = verify_complex(c);
    match &r.first_failure {
        None => Ok(r),
        Some(f) => Err(Error::ComplexBroken(format!(
            "{} check failed at {}[{},{}]: {}",
            f.check, f.matrix, f.row, f.col, f.detail
        ))),
    }
}

/// Rank of a polynomial matrix after substituting an integer point, modulo
/// a prime.
pub fn specialized_rank(m: &PolyMatrix, point: &[u64], prime: u64) -> usize {
    let values = m
        .iter()
        .map(|row| row.iter().map(|e| e.eval_mod(point, prime)).collect())
        .collect();
    rank_mod(values, prime)
}

/// A printed entry of the displayed differentials and its correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Repair {
    pub complex: &'static str,
    pub matrix: &'static str,
    pub row: usize,
    pub col: usize,
    pub printed: &'static str,
    pub corrected: &'static str,
}

pub const REPAIRS: &[Repair] = &[
    Repair {
        complex: "ed3",
        matrix: "D1",
        row: 1,
        col: 1,
        printed: "v^{p-y1} - u^{x1}",
        corrected: "v^{p-y1} - u^{x1} u1",
    },
    Repair {
        complex: "ed4",
        matrix: "A2",
        row: 1,
        col: 2,
        printed: "-u^{2x1-x2} v^{p-y1-y2}",
        corrected: "-u^{2x1-x2} v^{y1-y2}",
    },
    Repair {
        complex: "ed4",
        matrix: "A2",
        row: 1,
        col: 7,
        printed: "-v^{p-y1-y2}",
        corrected: "-v^{y1-y2}",
    },
    Repair {
        complex: "ed4",
        matrix: "A2",
        row: 2,
        col: 8,
        printed: "-v^{(y1-y2)/2}",
        corrected: "-v^{y1-y2}",
    },
    Repair {
        complex: "ed4",
        matrix: "A2",
        row: 4,
        col: 3,
        printed: "u^{q+x1-2x2}",
        corrected: "-u^{q+x1-2x2}",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 1,
        col: 2,
        printed: "-u^{q-x2} v^{y1-y2}",
        corrected: "-u^{q-2x2} v^{y1-y2}",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 3,
        col: 1,
        printed: "u^{x1} v^{p-2y1}",
        corrected: "u^{x2-x1} v^{p-2y1}",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 3,
        col: 2,
        printed: "-x1",
        corrected: "-u1",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 6,
        col: 1,
        printed: "-u^{2x1-x2}",
        corrected: "-u^{x1}",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 7,
        col: 1,
        printed: "u^{x2-x2} u1",
        corrected: "u^{2x1-x2} u1",
    },
    Repair {
        complex: "ed4",
        matrix: "A1",
        row: 8,
        col: 2,
        printed: "v^{2y2-y1} u2",
        corrected: "-v^{2y2-y1} u2",
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairCheck {
    pub repair: Repair,
    pub degree: i64,
    /// Every replacement of the repaired term of this degree (sign and
    /// monomial, or dropping the term) that keeps all products zero.
    pub candidates: Vec<String>,
    pub unique: bool,
}

/// For each repaired entry, searches all replacements of the repaired term
/// with the degree forced by the grading, holding every other entry fixed.
pub fn repair_candidates(c: &GradedComplex) -> Result<Vec<RepairCheck>> {
    let complex = if c.labels[0] == "D1" { "ed3" } else { "ed4" };
    let base = ensure_complex(c)?;
    let mut out = Vec::new();
    for repair in REPAIRS.iter().filter(|r| r.complex == complex) {
        let t = c
            .labels
            .iter()
            .position(|l| l == repair.matrix)
            .expect("repair refers to a matrix of this complex");
        let (i, j) = (repair.row - 1, repair.col - 1);
        let entry = &c.matrices[t][i][j];
        // the repaired term leads in display order
        let terms = entry.signed_terms();
        let repaired = terms.first().expect("repaired entries are nonzero");
        let mut keep = entry.clone();
        keep.add_term(repaired.exponents.clone(), -repaired.sign);
        let degree = base.shifts[t + 1][j] - base.shifts[t][i];

        let mut options: Vec<Poly> = vec![keep.clone()];
        for f in factorizations_over(&c.weights, degree) {
            for sign in [1, -1] {
                let mut e = keep.clone();
                e.add_term(Monomial(f.0.clone()), sign);
                options.push(e);
            }
        }
        let mut candidates = Vec::new();
        for e in options {
            let mut trial = c.clone();
            trial.matrices[t][i][j] = e.clone();
            if products_vanish(&trial) {
                candidates.push(e.to_string());
            }
        }
        let unique = candidates == vec![entry.to_string()];
        out.push(RepairCheck {
            repair: *repair,
            degree,
            candidates,
            unique,
        });
    }
    Ok(out)
}

fn products_vanish(c: &GradedComplex) -> bool {
    c.matrices
        .windows(2)
        .all(|w| mat_mul(&w[0], &w[1]).iter().flatten().all(Poly::is_zero))
}
